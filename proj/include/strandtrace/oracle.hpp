#pragma once

#include <cstdint>

#include "strandtrace/orders.hpp"
#include "strandtrace/symfun.hpp"

namespace strandtrace {

inline constexpr int kOracleMaxN = 10;
inline constexpr std::uint64_t kColoringCountGuard = 100'000'000;

/// Σ p_{cycletype(σ)} over σ ∈ S_n with σ(k) > λ_{n+1−k} for every k, each σ once.
/// Independent of the strand-diagram machinery. Throws GuardExceeded for n > kOracleMaxN.
SymFun ch_gamma(const StaircaseShape& shape);

/// Number of qualifying permutations (the permanent of the 0/1 position matrix).
std::uint64_t restricted_permutation_count(const StaircaseShape& shape);

/// Number of maps [n] → [m] giving different colors to the ends of every edge.
/// Throws GuardExceeded when m^n > kColoringCountGuard.
std::uint64_t proper_coloring_count(const IncompGraph& g, unsigned m);

}  // namespace strandtrace
