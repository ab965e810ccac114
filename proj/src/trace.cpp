#include "strandtrace/trace.hpp"

#include <sstream>
#include <stdexcept>

#include "strandtrace/error.hpp"

namespace strandtrace {

DiagramCombo DiagramCombo::scalar(const SymFun& value) {
  DiagramCombo c;
  c.add(WeightedDiagram{}, value);
  return c;
}

void DiagramCombo::add(const WeightedDiagram& key, const SymFun& coeff) {
  if (coeff.is_zero()) return;
  SymFun p = to_basis(coeff, Basis::powersum);
  auto [it, inserted] = terms_.try_emplace(key, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

DiagramCombo& DiagramCombo::operator+=(const DiagramCombo& other) {
  for (const auto& [key, coeff] : other.terms_) add(key, coeff);
  return *this;
}

DiagramCombo& DiagramCombo::operator*=(const SymFun& factor) {
  const SymFun p = to_basis(factor, Basis::powersum);
  Terms scaled;
  for (const auto& [key, coeff] : terms_) {
    SymFun c = multiply(coeff, p);
    if (!c.is_zero()) scaled.emplace(key, std::move(c));
  }
  terms_ = std::move(scaled);
  return *this;
}

bool DiagramCombo::is_scalar() const noexcept {
  for (const auto& [key, coeff] : terms_) {
    if (key.strands() != 0) return false;
  }
  return true;
}

SymFun DiagramCombo::scalar_value() const {
  if (!is_scalar()) throw std::logic_error("DiagramCombo::scalar_value: diagrams remain");
  SymFun total(Basis::powersum);
  for (const auto& [key, coeff] : terms_) total += coeff;
  return total;
}

std::string DiagramCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff.to_string() << ")";
    if (key.strands() == 0) continue;
    os << "*{" << key.diagram.to_text() << " dots";
    for (int w : key.weights) os << " " << w;
    os << "}";
  }
  return os.str();
}

WeightedDiagram dotted_strand(int dots) { return WeightedDiagram(StrandDiagram(1, {}), {dots}); }

DiagramCombo trace_weighted(const WeightedDiagram& wd) {
  const int n = wd.strands();
  if (n == 0) throw InvalidInput("trace: diagram has no strands left");
  const StrandDiagram& d = wd.diagram;
  if (!d.is_staircase_like()) throw NonTraceable("trace: " + d.to_text() + " is not staircase-like");

  const int a = wd.weights.back();
  DiagramCombo out;
  if (n == 1) {
    out.add(WeightedDiagram{}, power_sum(a + 1, Basis::powersum));
    return out;
  }

  std::vector<Crossing> crossings = d.crossings();
  const bool engaged = !crossings.empty() && crossings.back().j == n;
  int top_i = 0;
  if (engaged) {
    top_i = crossings.back().i;
    crossings.back().j = n - 1;
    if (crossings.back().size() < 2) crossings.pop_back();
  }
  StrandDiagram reduced(n - 1, std::move(crossings));
  if (!reduced.is_staircase_like()) {
    throw NonTraceable("trace: removing the last strand of " + d.to_text() + " leaves " + reduced.to_text() +
                       ", which is not staircase-like");
  }

  std::vector<int> weights(wd.weights.begin(), wd.weights.end() - 1);
  out.add(WeightedDiagram(reduced, weights), power_sum(a + 1, Basis::powersum));
  if (engaged) {
    for (int s = top_i; s <= n - 1; ++s) {
      std::vector<int> w = weights;
      w[static_cast<std::size_t>(s - 1)] += a + 1;
      out.add(WeightedDiagram(reduced, std::move(w)), SymFun::one(Basis::powersum));
    }
  }
  return out;
}

DiagramCombo trace_combo(const DiagramCombo& combo) {
  DiagramCombo out;
  for (const auto& [key, coeff] : combo.terms()) {
    if (key.strands() == 0) {
      out.add(key, coeff);
      continue;
    }
    DiagramCombo step = trace_weighted(key);
    step *= coeff;
    out += step;
  }
  return out;
}

SymFun full_trace(const DiagramCombo& combo) {
  DiagramCombo cur = combo;
  while (!cur.is_scalar()) cur = trace_combo(cur);
  return cur.scalar_value();
}

SymFun full_trace(const StrandDiagram& d) {
  DiagramCombo start;
  start.add(WeightedDiagram(d), SymFun::one(Basis::powersum));
  return full_trace(start);
}

DiagramCombo partial(const StrandDiagram& d, int k) {
  if (d.strands() < 1) throw InvalidInput("partial: diagram needs at least one strand");
  if (k < 0) throw InvalidInput("partial: k must be nonnegative");
  DiagramCombo out;
  for (int j = 0; j <= k; ++j) {
    std::vector<int> w(static_cast<std::size_t>(d.strands()), 0);
    w.back() = j;
    out.add(WeightedDiagram(d, std::move(w)), complete_h(k - j, Basis::powersum));
  }
  return out;
}

DiagramCombo iterate_trace_partial(const StrandDiagram& d, int k, int steps) {
  DiagramCombo cur = partial(d, k);
  for (int s = 0; s < steps && !cur.is_scalar(); ++s) cur = trace_combo(cur);
  return cur;
}

}  // namespace strandtrace
