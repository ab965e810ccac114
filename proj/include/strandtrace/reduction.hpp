#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandtrace/diagram.hpp"
#include "strandtrace/orders.hpp"
#include "strandtrace/symfun.hpp"
#include "strandtrace/trace.hpp"

namespace strandtrace {

/// Σ coeff · ∂_b D over (D, b), with coefficients in the h basis and the ∂
/// dots living on the right-most strand of D.
class PartialCombo {
 public:
  using Key = std::pair<StrandDiagram, int>;
  using Terms = std::map<Key, SymFun>;

  void add(const StrandDiagram& d, int b, const SymFun& coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Rewrites every ∂_b D as h_b D + h_{b−1} D^1 + ... + D^b.
  DiagramCombo expand() const;

  /// Every h coefficient of every term is ≥ 0.
  bool nonnegative() const;

  /// deg(coeff) + b + #strands when it is the same for every term (and every
  /// coefficient is homogeneous); nullopt otherwise. Empty combos give nullopt.
  std::optional<int> total_degree() const;

  std::string to_string() const;

  friend bool operator==(const PartialCombo&, const PartialCombo&) = default;

 private:
  Terms terms_;
};

/// trace^{n−1}(∂_k [1,n]) as a combination of ∂'s on one strand:
/// (n−2)! Σ_{i=2}^{n} [(i−1) h_{n−i} ∂_{k+i−1} + (k+i−n) h_{k+i−1} ∂_{n−i}],
/// accumulated so that the negative contributions cancel. Throws InvalidInput
/// for n < 2 and std::logic_error if a net coefficient is not a nonnegative
/// multiple of a single h.
PartialCombo closed_form_single_crossing(int n, int k);

/// The same quantity in its raw dotted-strand form
/// (n−2)! Σ_j h_{k−j} [Σ_i (i−1) h_{n−i} |^{i+j−1} + Σ_i Σ_ℓ h_{n−ℓ−i} p_{ℓ+j} |^{i−1}].
DiagramCombo single_crossing_raw(int n, int k);

struct Reduction {
  SymFun value{Basis::homogeneous};
  /// Every intermediate combination, starting with ∂_0 D and ending with the scalar.
  std::vector<PartialCombo> steps;
};

/// Peels crossings off the top of a staircase-like diagram using the single
/// crossing closed form; a ∂_b on a strand no crossing touches collapses to
/// (b+1) h_{b+1}. Throws NonTraceable when two consecutive crossings share
/// more than one strand.
Reduction reduce_diagram(const StrandDiagram& d);

/// reduce_diagram(diagram_from_lambda(shape)). With require_211 set, shapes
/// that contain 2+1+1 are rejected with InvalidInput.
Reduction reduce_to_h(const StaircaseShape& shape, bool require_211 = true);

}  // namespace strandtrace
