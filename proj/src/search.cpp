#include "strandtrace/search.hpp"

#include <algorithm>
#include <limits>

#include "strandtrace/error.hpp"
#include "strandtrace/parallel.hpp"

namespace strandtrace {

SearchRng::SearchRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SearchRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("SearchRng::below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<Crossing> all_crossings(int strands) {
  std::vector<Crossing> out;
  for (int i = 1; i <= strands; ++i) {
    for (int j = i + 1; j <= strands; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<StrandDiagram> search_diagrams(const SearchOptions& options) {
  if (options.strands < 2) throw InvalidInput("search: need at least 2 strands");
  if (options.max_crossings < 1) throw InvalidInput("search: max-crossings must be positive");
  const std::vector<Crossing> pool = all_crossings(options.strands);
  std::vector<StrandDiagram> out;

  if (options.mode == SearchMode::random) {
    SearchRng rng(options.seed);
    out.reserve(options.samples);
    for (std::size_t s = 0; s < options.samples; ++s) {
      const auto len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(options.max_crossings)));
      std::vector<Crossing> seq;
      for (int c = 0; c < len; ++c) seq.push_back(pool[rng.below(pool.size())]);
      out.emplace_back(options.strands, std::move(seq));
    }
    return out;
  }

  long double total = 0, layer = 1;
  for (int len = 1; len <= options.max_crossings; ++len) {
    layer *= static_cast<long double>(pool.size());
    total += layer;
  }
  if (total > 5e7L) throw GuardExceeded("search: exhaustive space has more than 5e7 diagrams");

  for (int len = 1; len <= options.max_crossings; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<Crossing> seq;
      seq.reserve(digits.size());
      for (std::size_t d : digits) seq.push_back(pool[d]);
      out.emplace_back(options.strands, std::move(seq));
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == pool.size()) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

SearchRecord evaluate_diagram(const StrandDiagram& d) {
  SearchRecord rec;
  rec.diagram = d;
  HPositivity verdict = is_h_positive(diagram_csf(d, CsfMode::multiset));
  rec.h_expansion = std::move(verdict.h_expansion);
  rec.positive = verdict.positive;
  rec.witness = std::move(verdict.witness);
  return rec;
}

void search_general(const SearchOptions& options, const std::function<void(const SearchRecord&)>& sink) {
  const std::vector<StrandDiagram> diagrams = search_diagrams(options);
  for (const StrandDiagram& d : diagrams) {
    if (coloring_count(d) > kColoringGuard) {
      throw GuardExceeded("search: " + d.to_text() + " exceeds the coloring guard");
    }
  }
  const unsigned workers = options.threads ? options.threads : worker_count();
  constexpr std::size_t kBatch = 4096;
  std::vector<SearchRecord> batch;
  for (std::size_t start = 0; start < diagrams.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, diagrams.size() - start);
    batch.assign(count, SearchRecord{});
    parallel_for(count, workers, [&](std::size_t k) { batch[k] = evaluate_diagram(diagrams[start + k]); });
    for (const SearchRecord& r : batch) sink(r);
  }
}

}  // namespace strandtrace
