#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "strandtrace/diagram.hpp"
#include "strandtrace/symfun.hpp"

namespace strandtrace {

enum class SearchMode { exhaustive, random };

struct SearchOptions {
  int strands = 4;
  int max_crossings = 3;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  /// Number of diagrams drawn in random mode.
  std::size_t samples = 1000;
  /// 0 means worker_count().
  unsigned threads = 0;
};

struct SearchRecord {
  StrandDiagram diagram;
  SymFun h_expansion{Basis::homogeneous};
  bool positive = true;
  std::optional<NegativeWitness> witness;
};

/// Seeded source for random mode: std::mt19937_64 words mapped to [0, bound)
/// by rejection sampling, so draws are identical on every platform.
class SearchRng {
 public:
  explicit SearchRng(std::uint64_t seed);
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Every crossing [i,j] on `strands` strands, in lexicographic order.
std::vector<Crossing> all_crossings(int strands);

/// The diagrams a search visits, in emission order. Exhaustive mode lists all
/// sequences of 1..max_crossings crossings by length, then lexicographically.
std::vector<StrandDiagram> search_diagrams(const SearchOptions& options);

/// multiset-mode csf of d, its h expansion and positivity verdict.
SearchRecord evaluate_diagram(const StrandDiagram& d);

/// Evaluates every diagram of search_diagrams(options) and hands the records to
/// `sink` in emission order regardless of the number of workers. Throws
/// GuardExceeded before doing any work if a diagram is too large.
void search_general(const SearchOptions& options, const std::function<void(const SearchRecord&)>& sink);

}  // namespace strandtrace
