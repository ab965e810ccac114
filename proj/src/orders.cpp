#include "strandtrace/orders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "strandtrace/error.hpp"

namespace strandtrace {

StaircaseShape::StaircaseShape(int n, Partition lambda) : n_(n), lambda_(std::move(lambda)) {
  if (n < 1) throw InvalidInput("shape: n must be positive");
  for (int i = 1; i <= lambda_.length(); ++i) {
    if (lambda_.part(i) > n - i) {
      throw InvalidInput("shape: " + lambda_.to_string() + " is not contained in stair(" +
                         std::to_string(n) + ")");
    }
  }
}

std::string StaircaseShape::to_string() const {
  return lambda_.to_string() + " in stair(" + std::to_string(n_) + ")";
}

Partition parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw InvalidInput("empty part in '" + text + "'");
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad part '" + token + "'");
    }
    if (used != token.size()) throw InvalidInput("bad part '" + token + "'");
    parts.push_back(v);
  }
  Partition p(std::move(parts));
  return p;
}

Partition staircase(int n) {
  std::vector<int> parts;
  for (int v = n - 1; v >= 1; --v) parts.push_back(v);
  return Partition(std::move(parts));
}

UIOrder::UIOrder(int n, std::vector<std::uint64_t> below) : n_(n), below_(std::move(below)) {
  if (n < 0 || n > 64) throw InvalidInput("order: n must be in [0,64]");
  if (static_cast<int>(below_.size()) != n) throw InvalidInput("order: relation table has wrong size");
  for (int b = 1; b <= n; ++b) {
    const std::uint64_t mask = below_[static_cast<std::size_t>(b - 1)];
    const std::uint64_t allowed = (b == 1) ? 0 : ((std::uint64_t{1} << (b - 1)) - 1);
    if (mask & ~allowed) throw InvalidInput("order: relation is not naturally labelled");
    for (int a = 1; a < b; ++a) {
      if ((mask >> (a - 1)) & 1U) {
        if (below_[static_cast<std::size_t>(a - 1)] & ~mask) {
          throw InvalidInput("order: relation is not transitive");
        }
      }
    }
  }
}

bool UIOrder::precedes(int a, int b) const noexcept {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return (below_[static_cast<std::size_t>(b - 1)] >> (a - 1)) & 1U;
}

std::vector<int> UIOrder::below(int b) const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a) {
    if (precedes(a, b)) out.push_back(a);
  }
  return out;
}

UIOrder poset_from_lambda(const StaircaseShape& shape) {
  const int n = shape.n();
  if (n > 64) throw InvalidInput("order: n must be at most 64");
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
  for (int b = 1; b <= n; ++b) {
    const int bound = shape.part(n + 1 - b);
    below[static_cast<std::size_t>(b - 1)] = bound == 0 ? 0 : ((std::uint64_t{1} << bound) - 1);
  }
  return UIOrder(n, std::move(below));
}

namespace {

class PatternSearch {
 public:
  PatternSearch(const UIOrder& order, const std::vector<int>& lengths)
      : order_(order), lengths_(lengths), chains_(lengths.size()) {}

  bool run() { return place(0, 0); }
  PatternWitness witness() const { return chains_; }

 private:
  bool compatible(int e, std::size_t chain) const {
    if ((used_ >> (e - 1)) & 1U) return false;
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      if (c == chain) continue;
      for (int x : chains_[c]) {
        if (order_.comparable(e, x)) return false;
      }
    }
    return true;
  }

  bool place(std::size_t chain, int filled) {
    if (chain == lengths_.size()) return true;
    if (filled == lengths_[chain]) return place(chain + 1, 0);
    auto& cur = chains_[chain];
    const int start = cur.empty() ? 1 : cur.back() + 1;
    for (int e = start; e <= order_.n(); ++e) {
      if (!cur.empty() && !order_.precedes(cur.back(), e)) continue;
      if (!compatible(e, chain)) continue;
      cur.push_back(e);
      used_ |= std::uint64_t{1} << (e - 1);
      if (place(chain, filled + 1)) return true;
      used_ &= ~(std::uint64_t{1} << (e - 1));
      cur.pop_back();
    }
    return false;
  }

  const UIOrder& order_;
  const std::vector<int>& lengths_;
  PatternWitness chains_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::optional<PatternWitness> find_pattern(const UIOrder& order, const std::vector<int>& chain_lengths) {
  int total = 0;
  for (int len : chain_lengths) {
    if (len < 1) throw InvalidInput("pattern: chain lengths must be positive");
    total += len;
  }
  if (total > kPatternGuard) {
    throw GuardExceeded("pattern: total size " + std::to_string(total) + " exceeds " +
                        std::to_string(kPatternGuard));
  }
  PatternSearch search(order, chain_lengths);
  if (search.run()) return search.witness();
  return std::nullopt;
}

bool avoids_pattern(const UIOrder& order, const std::vector<int>& chain_lengths) {
  return !find_pattern(order, chain_lengths).has_value();
}

std::vector<Cell> corners_of_shape(const StaircaseShape& shape) {
  std::vector<Cell> out;
  const int n = shape.n();
  // Part i occupies row n+1−i; its last cell is a corner when λ_i > λ_{i+1}.
  for (int i = shape.lambda().length(); i >= 1; --i) {
    if (shape.part(i) > shape.part(i + 1)) out.push_back(Cell{shape.part(i), n + 1 - i});
  }
  return out;
}

bool is_211_avoiding(const StaircaseShape& shape) {
  // Corners of stair(n) satisfy row = col + 1, those of stair(n−1) row = col + 2.
  const std::vector<Cell> corners = corners_of_shape(shape);
  return std::all_of(corners.begin(), corners.end(), [](const Cell& c) {
    const int offset = c.row - c.col;
    return offset == 1 || offset == 2;
  });
}

IncompGraph incomparability_graph(const UIOrder& order) {
  IncompGraph g;
  g.n = order.n();
  for (int a = 1; a <= order.n(); ++a) {
    for (int b = a + 1; b <= order.n(); ++b) {
      if (!order.comparable(a, b)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

StrandDiagram diagram_from_lambda(const StaircaseShape& shape) {
  const int n = shape.n();
  const int len = shape.lambda().length();
  std::vector<Crossing> raw;
  raw.push_back({1, n - len});
  for (int j = len - 1; j >= 1; --j) {
    if (shape.part(j) > shape.part(j + 1)) raw.push_back({shape.part(j + 1) + 1, n - j});
  }
  raw.push_back({shape.part(1) + 1, n});

  std::vector<Crossing> crossings;
  for (const Crossing& c : raw) {
    if (c.size() < 2) continue;
    if (!crossings.empty() && crossings.back() == c) continue;
    crossings.push_back(c);
  }
  return StrandDiagram(n, std::move(crossings));
}

std::vector<StaircaseShape> enumerate_shapes(int n, ShapeFilter filter) {
  if (n < 1) throw InvalidInput("enumerate_shapes: n must be positive");
  if (n > kShapeGuard) {
    throw GuardExceeded("enumerate_shapes: n=" + std::to_string(n) + " exceeds " + std::to_string(kShapeGuard));
  }
  std::vector<Partition> lambdas;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int max_part) {
    lambdas.emplace_back(cur);
    if (row > n - 1) return;
    for (int v = 1; v <= std::min(max_part, n - row); ++v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(1, n);
  std::sort(lambdas.begin(), lambdas.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  });
  std::vector<StaircaseShape> out;
  for (auto& lam : lambdas) {
    StaircaseShape s(n, std::move(lam));
    if (filter == ShapeFilter::avoiding_211 && !is_211_avoiding(s)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace strandtrace
