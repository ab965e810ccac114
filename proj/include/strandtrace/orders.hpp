#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandtrace/diagram.hpp"
#include "strandtrace/partition.hpp"

namespace strandtrace {

/// A partition λ together with the side n of the ambient square; λ ⊆ stair(n).
class StaircaseShape {
 public:
  /// Throws InvalidInput unless n ≥ 1 and λ_i ≤ n − i for every i.
  StaircaseShape(int n, Partition lambda);

  int n() const noexcept { return n_; }
  const Partition& lambda() const noexcept { return lambda_; }
  /// λ_i, zero-padded for i > ℓ(λ).
  int part(int i) const noexcept { return lambda_.part(i); }

  std::string to_string() const;  // "(4,3,1,1) in stair(6)"

  friend bool operator==(const StaircaseShape&, const StaircaseShape&) = default;

 private:
  int n_;
  Partition lambda_;
};

/// "4,3,1,1" → (4,3,1,1); the empty string is the empty partition.
Partition parse_parts(const std::string& text);

/// stair(n) = (n−1, n−2, ..., 1).
Partition staircase(int n);

/// A naturally labelled strict partial order on [n], n ≤ 64.
class UIOrder {
 public:
  /// `below[b-1]` is the bitmask of elements a (bit a-1) with a ≺ b.
  /// Throws InvalidInput unless the relation is irreflexive, transitive and a ≺ b ⇒ a < b.
  UIOrder(int n, std::vector<std::uint64_t> below);

  int n() const noexcept { return n_; }
  bool precedes(int a, int b) const noexcept;
  bool comparable(int a, int b) const noexcept { return precedes(a, b) || precedes(b, a); }
  std::vector<int> below(int b) const;

  friend bool operator==(const UIOrder&, const UIOrder&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> below_;
};

/// Incomparability graph; edges are (a, b) with a < b, sorted.
struct IncompGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const IncompGraph&, const IncompGraph&) = default;
};

/// Cell of the n×n square, column counted from the left and row from the top.
struct Cell {
  int col = 0;
  int row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// a ≺ b iff a ≤ λ_{n+1−b}.
UIOrder poset_from_lambda(const StaircaseShape& shape);

/// Maximum total size accepted by the pattern search.
inline constexpr int kPatternGuard = 12;

/// An induced copy of a_1 + ... + a_k: one increasing chain per pattern entry.
using PatternWitness = std::vector<std::vector<int>>;

/// Exhaustive search for an induced copy of the disjoint union of chains with
/// the given lengths. Throws GuardExceeded if the lengths sum past kPatternGuard.
std::optional<PatternWitness> find_pattern(const UIOrder& order, const std::vector<int>& chain_lengths);
bool avoids_pattern(const UIOrder& order, const std::vector<int>& chain_lengths);

/// North-east inner corners of the Young diagram of λ drawn in the south-west
/// corner of the n×n square, listed north-west to south-east.
std::vector<Cell> corners_of_shape(const StaircaseShape& shape);

/// Corner criterion: every corner of λ is a corner of stair(n) or of stair(n−1).
bool is_211_avoiding(const StaircaseShape& shape);

IncompGraph incomparability_graph(const UIOrder& order);

/// First crossing [1, n−ℓ], one crossing [λ_{j+1}+1, n−j] per descent λ_j > λ_{j+1}
/// read north-west to south-east, last crossing [λ_1+1, n]. Size-1 crossings are
/// dropped and consecutive repeats collapsed.
StrandDiagram diagram_from_lambda(const StaircaseShape& shape);

enum class ShapeFilter { all, avoiding_211 };

inline constexpr int kShapeGuard = 12;

/// Every λ ⊆ stair(n) once, ordered by |λ| and then lexicographically
/// decreasing. Throws GuardExceeded for n > kShapeGuard.
std::vector<StaircaseShape> enumerate_shapes(int n, ShapeFilter filter = ShapeFilter::all);

}  // namespace strandtrace
