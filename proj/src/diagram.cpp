#include "strandtrace/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "strandtrace/error.hpp"

namespace strandtrace {

StrandDiagram::StrandDiagram(int n, std::vector<Crossing> crossings) : n_(n), crossings_(std::move(crossings)) {
  if (n < 0) throw InvalidInput("diagram: negative strand count");
  for (const Crossing& c : crossings_) {
    if (c.i < 1 || c.j > n || c.i >= c.j) {
      throw InvalidInput("diagram: crossing [" + std::to_string(c.i) + "," + std::to_string(c.j) +
                         "] does not fit on " + std::to_string(n) + " strands");
    }
  }
}

bool StrandDiagram::is_staircase_like() const noexcept {
  for (std::size_t k = 1; k < crossings_.size(); ++k) {
    if (crossings_[k].i <= crossings_[k - 1].i || crossings_[k].j <= crossings_[k - 1].j) return false;
  }
  return true;
}

std::string StrandDiagram::to_text() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  for (const Crossing& c : crossings_) s += " [" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
  return s;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("diagram text '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StrandDiagram StrandDiagram::parse(std::string_view text) {
  Scanner sc(text);
  sc.expect('n');
  sc.expect('=');
  const int n = sc.integer();
  sc.accept(';');
  std::vector<Crossing> crossings;
  while (!sc.done()) {
    sc.expect('[');
    const int i = sc.integer();
    sc.expect(',');
    const int j = sc.integer();
    sc.expect(']');
    crossings.push_back({i, j});
  }
  return StrandDiagram(n, std::move(crossings));
}

WeightedDiagram::WeightedDiagram(StrandDiagram d)
    : diagram(std::move(d)), weights(static_cast<std::size_t>(diagram.strands()), 0) {}

WeightedDiagram::WeightedDiagram(StrandDiagram d, std::vector<int> w) : diagram(std::move(d)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != diagram.strands()) {
    throw InvalidInput("weighted diagram: need one weight per strand");
  }
  if (std::any_of(weights.begin(), weights.end(), [](int a) { return a < 0; })) {
    throw InvalidInput("weighted diagram: negative dot count");
  }
}

std::uint64_t coloring_count(const StrandDiagram& d) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const Crossing& c : d.crossings()) {
    for (int f = 2; f <= c.size(); ++f) {
      if (total > kMax / static_cast<std::uint64_t>(f)) return kMax;
      total *= static_cast<std::uint64_t>(f);
    }
  }
  return total;
}

std::map<Permutation, std::uint64_t> colored_permutations(const StrandDiagram& d) {
  if (coloring_count(d) > kColoringGuard) {
    throw GuardExceeded("colored_permutations: " + d.to_text() + " has more than " +
                        std::to_string(kColoringGuard) + " colorings");
  }
  const int n = d.strands();
  using State = std::vector<std::uint8_t>;  // state[x] = current position of the strand that started at x
  std::map<State, std::uint64_t> states;
  State start(static_cast<std::size_t>(n));
  std::iota(start.begin(), start.end(), std::uint8_t{0});
  states.emplace(std::move(start), 1);

  for (const Crossing& c : d.crossings()) {
    const auto lo = static_cast<std::uint8_t>(c.i - 1);
    const auto hi = static_cast<std::uint8_t>(c.j - 1);
    std::vector<std::uint8_t> local(static_cast<std::size_t>(c.size()));
    std::map<State, std::uint64_t> next;
    for (const auto& [state, mult] : states) {
      std::iota(local.begin(), local.end(), lo);
      do {
        State moved = state;
        for (auto& pos : moved) {
          if (pos >= lo && pos <= hi) pos = local[static_cast<std::size_t>(pos - lo)];
        }
        next[std::move(moved)] += mult;
      } while (std::next_permutation(local.begin(), local.end()));
    }
    states = std::move(next);
  }

  std::map<Permutation, std::uint64_t> out;
  for (const auto& [state, mult] : states) {
    std::vector<int> images(state.size());
    for (std::size_t x = 0; x < state.size(); ++x) images[x] = state[x] + 1;
    out.emplace(Permutation(std::move(images)), mult);
  }
  return out;
}

SymFun diagram_csf(const StrandDiagram& d, CsfMode mode) {
  SymFun out(Basis::powersum);
  for (const auto& [sigma, mult] : colored_permutations(d)) {
    const mpq_class weight = mode == CsfMode::distinct ? mpq_class(1) : mpq_class(mpz_class(static_cast<unsigned long>(mult)));
    out.add_term(cycle_type(sigma), weight);
  }
  return out;
}

}  // namespace strandtrace
