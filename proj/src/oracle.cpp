#include "strandtrace/oracle.hpp"

#include <map>

#include "strandtrace/error.hpp"
#include "strandtrace/parallel.hpp"
#include "strandtrace/permutation.hpp"

namespace strandtrace {

namespace {

using Tally = std::map<Partition, std::uint64_t>;

// Depth-first over positions 1..n; position k may only take images above λ_{n+1−k}.
void extend(int k, int n, const std::vector<int>& floor, std::vector<std::uint8_t>& img,
            std::vector<bool>& taken, Tally& tally) {
  if (k > n) {
    ++tally[cycle_type_of_images(img)];
    return;
  }
  for (int v = floor[static_cast<std::size_t>(k)] + 1; v <= n; ++v) {
    if (taken[static_cast<std::size_t>(v)]) continue;
    taken[static_cast<std::size_t>(v)] = true;
    img[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(v - 1);
    extend(k + 1, n, floor, img, taken, tally);
    taken[static_cast<std::size_t>(v)] = false;
  }
}

Tally tally_restricted(const StaircaseShape& shape) {
  const int n = shape.n();
  if (n > kOracleMaxN) {
    throw GuardExceeded("ch_gamma: n=" + std::to_string(n) + " exceeds " + std::to_string(kOracleMaxN));
  }
  std::vector<int> floor(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) floor[static_cast<std::size_t>(k)] = shape.part(n + 1 - k);

  // Split the search on the image of position 1; merging tallies is order independent.
  const int first_lo = floor[1] + 1;
  const std::size_t branches = static_cast<std::size_t>(n - first_lo + 1);
  std::vector<Tally> partial(branches);
  parallel_for(branches, worker_count(), [&](std::size_t b) {
    const int v = first_lo + static_cast<int>(b);
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    std::vector<bool> taken(static_cast<std::size_t>(n + 1), false);
    taken[static_cast<std::size_t>(v)] = true;
    img[0] = static_cast<std::uint8_t>(v - 1);
    extend(2, n, floor, img, taken, partial[b]);
  });
  Tally total;
  for (const Tally& t : partial) {
    for (const auto& [ct, count] : t) total[ct] += count;
  }
  return total;
}

}  // namespace

SymFun ch_gamma(const StaircaseShape& shape) {
  SymFun out(Basis::powersum);
  for (const auto& [ct, count] : tally_restricted(shape)) {
    out.add_term(ct, mpq_class(mpz_class(static_cast<unsigned long>(count))));
  }
  return out;
}

std::uint64_t restricted_permutation_count(const StaircaseShape& shape) {
  std::uint64_t total = 0;
  for (const auto& [ct, count] : tally_restricted(shape)) total += count;
  return total;
}

std::uint64_t proper_coloring_count(const IncompGraph& g, unsigned m) {
  const int n = g.n;
  long double space = 1;
  for (int i = 0; i < n; ++i) space *= m;
  if (space > static_cast<long double>(kColoringCountGuard)) {
    throw GuardExceeded("proper_coloring_count: m^n exceeds " + std::to_string(kColoringCountGuard));
  }
  if (n == 0) return 1;
  if (m == 0) return 0;
  // earlier[v] lists neighbours u < v; colour vertices in order and backtrack.
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n + 1));
  for (auto [a, b] : g.edges) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw InvalidInput("graph: bad edge");
    earlier[static_cast<std::size_t>(std::max(a, b))].push_back(std::min(a, b));
  }
  std::vector<unsigned> color(static_cast<std::size_t>(n + 1), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto& self, int v) -> void {
    if (v > n) {
      ++count;
      return;
    }
    for (unsigned c = 1; c <= m; ++c) {
      bool ok = true;
      for (int u : earlier[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
  return count;
}

}  // namespace strandtrace
