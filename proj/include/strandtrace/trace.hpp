#pragma once

#include <map>
#include <string>

#include "strandtrace/diagram.hpp"
#include "strandtrace/symfun.hpp"

namespace strandtrace {

/// Λ-linear combination of weighted strand diagrams.
///
/// Coefficients are kept in the power-sum basis (anything added is converted).
/// A key with zero strands stands for the empty diagram, so a combo whose keys
/// all have zero strands is just a symmetric function.
class DiagramCombo {
 public:
  using Terms = std::map<WeightedDiagram, SymFun>;

  DiagramCombo() = default;

  static DiagramCombo scalar(const SymFun& value);

  void add(const WeightedDiagram& key, const SymFun& coeff);
  DiagramCombo& operator+=(const DiagramCombo& other);
  DiagramCombo& operator*=(const SymFun& factor);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True when every key is the empty diagram (including the empty combo).
  bool is_scalar() const noexcept;
  /// The symmetric function of a scalar combo; throws std::logic_error otherwise.
  SymFun scalar_value() const;

  std::string to_string() const;

  friend bool operator==(const DiagramCombo&, const DiagramCombo&) = default;

 private:
  Terms terms_;
};

/// One trace step: close the last strand of a staircase-like weighted diagram.
///
/// With a dots on strand n, the result is p_{a+1}·D' plus, when the top
/// crossing R = [i, n] engages strand n, one copy of D' per strand s ∈ [i, n−1]
/// carrying a+1 extra dots on s. D' deletes strand n and shrinks R to [i, n−1]
/// (dropped when that has size 1). A single strand traces to p_{a+1}.
///
/// Throws NonTraceable when the input or D' is not staircase-like.
DiagramCombo trace_weighted(const WeightedDiagram& wd);

/// Linear extension of trace_weighted; scalar keys pass through unchanged.
DiagramCombo trace_combo(const DiagramCombo& combo);

/// Traces until nothing but symmetric functions remain.
SymFun full_trace(const DiagramCombo& combo);
SymFun full_trace(const StrandDiagram& d);

/// ∂_k D = h_k D + h_{k−1} D^1 + ... + h_0 D^k, with D^j carrying j dots on strand n.
DiagramCombo partial(const StrandDiagram& d, int k);

/// Applies `steps` trace steps to partial(d, k).
DiagramCombo iterate_trace_partial(const StrandDiagram& d, int k, int steps);

/// A single strand carrying `dots` dots.
WeightedDiagram dotted_strand(int dots);

}  // namespace strandtrace
