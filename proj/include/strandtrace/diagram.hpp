#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "strandtrace/permutation.hpp"
#include "strandtrace/symfun.hpp"

namespace strandtrace {

/// Strands i..j meeting at a single point; 1 ≤ i < j.
struct Crossing {
  int i = 0;
  int j = 0;

  int size() const noexcept { return j - i + 1; }
  bool engages(int strand) const noexcept { return i <= strand && strand <= j; }

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// Crossings on n strands listed bottom to top.
class StrandDiagram {
 public:
  StrandDiagram() = default;
  /// Throws InvalidInput unless every crossing satisfies 1 ≤ i < j ≤ n.
  StrandDiagram(int n, std::vector<Crossing> crossings);

  int strands() const noexcept { return n_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  bool empty() const noexcept { return crossings_.empty(); }

  /// i's and j's both strictly increasing from bottom to top.
  bool is_staircase_like() const noexcept;

  /// "n=4; [2,3] [1,2] [3,4] [2,3]"
  std::string to_text() const;
  static StrandDiagram parse(std::string_view text);

  friend auto operator<=>(const StrandDiagram&, const StrandDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<Crossing> crossings_;
};

/// A strand diagram whose strands carry dots on top (weights[s-1] on strand s).
struct WeightedDiagram {
  StrandDiagram diagram;
  std::vector<int> weights;

  WeightedDiagram() = default;
  explicit WeightedDiagram(StrandDiagram d);
  /// Throws InvalidInput on a size mismatch or negative weight.
  WeightedDiagram(StrandDiagram d, std::vector<int> w);

  int strands() const noexcept { return diagram.strands(); }

  friend auto operator<=>(const WeightedDiagram&, const WeightedDiagram&) = default;
};

/// Enumeration bound on Π (crossing size)!.
inline constexpr std::uint64_t kColoringGuard = 10'000'000;

/// Π over crossings of (size)!, saturating at UINT64_MAX.
std::uint64_t coloring_count(const StrandDiagram& d);

/// Every composite permutation (bottom position ↦ top position) of a coloring,
/// with the number of colorings producing it. Throws GuardExceeded past kColoringGuard.
std::map<Permutation, std::uint64_t> colored_permutations(const StrandDiagram& d);

enum class CsfMode { distinct, multiset };

/// Σ p_{cycle type} over the permutations of d (power-sum basis).
SymFun diagram_csf(const StrandDiagram& d, CsfMode mode);

}  // namespace strandtrace
