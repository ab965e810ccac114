#include "strandtrace/reduction.hpp"

#include <sstream>
#include <stdexcept>

#include "strandtrace/error.hpp"

namespace strandtrace {

namespace {

mpq_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

SymFun h_of(int n) { return complete_h(n, Basis::homogeneous); }

}  // namespace

void PartialCombo::add(const StrandDiagram& d, int b, const SymFun& coeff) {
  if (b < 0) throw InvalidInput("partial combo: negative ∂ index");
  if (coeff.is_zero()) return;
  SymFun h = to_basis(coeff, Basis::homogeneous);
  auto [it, inserted] = terms_.try_emplace(Key{d, b}, h);
  if (inserted) return;
  it->second += h;
  if (it->second.is_zero()) terms_.erase(it);
}

DiagramCombo PartialCombo::expand() const {
  DiagramCombo out;
  for (const auto& [key, coeff] : terms_) {
    const auto& [d, b] = key;
    if (d.strands() == 0) {
      out.add(WeightedDiagram{}, coeff);
      continue;
    }
    DiagramCombo part = partial(d, b);
    part *= coeff;
    out += part;
  }
  return out;
}

bool PartialCombo::nonnegative() const {
  for (const auto& [key, coeff] : terms_) {
    for (const auto& [idx, c] : coeff.terms()) {
      if (c < 0) return false;
    }
  }
  return true;
}

std::optional<int> PartialCombo::total_degree() const {
  std::optional<int> total;
  for (const auto& [key, coeff] : terms_) {
    const auto deg = coeff.degree();
    if (!deg) return std::nullopt;
    const int t = *deg + key.second + key.first.strands();
    if (total && *total != t) return std::nullopt;
    total = t;
  }
  return total;
}

std::string PartialCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff.to_string() << ")";
    if (key.first.strands() > 0) os << "*d" << key.second << "{" << key.first.to_text() << "}";
  }
  return os.str();
}

PartialCombo closed_form_single_crossing(int n, int k) {
  if (n < 2) throw InvalidInput("closed form: crossing size must be at least 2");
  if (k < 0) throw InvalidInput("closed form: k must be nonnegative");
  const StrandDiagram strand(1, {});
  const mpq_class scale = factorial(n - 2);
  PartialCombo out;
  for (int i = 2; i <= n; ++i) {
    out.add(strand, k + i - 1, h_of(n - i) * mpq_class(scale * (i - 1)));
    out.add(strand, n - i, h_of(k + i - 1) * mpq_class(scale * (k + i - n)));
  }
  for (const auto& [key, coeff] : out.terms()) {
    if (coeff.terms().size() != 1 || coeff.terms().begin()->second < 0 ||
        coeff.terms().begin()->first.length() > 1) {
      throw std::logic_error("closed form: net coefficient " + coeff.to_string() + " of d" +
                             std::to_string(key.second) + " is not a nonnegative multiple of one h");
    }
  }
  return out;
}

DiagramCombo single_crossing_raw(int n, int k) {
  if (n < 2) throw InvalidInput("closed form: crossing size must be at least 2");
  if (k < 0) throw InvalidInput("closed form: k must be nonnegative");
  const Basis P = Basis::powersum;
  const mpq_class scale = factorial(n - 2);
  DiagramCombo out;
  for (int j = 0; j <= k; ++j) {
    const SymFun outer = complete_h(k - j, P) * scale;
    for (int i = 2; i <= n; ++i) {
      out.add(dotted_strand(i + j - 1), multiply(outer, complete_h(n - i, P)) * mpq_class(i - 1));
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int l = 1; l <= n - i; ++l) {
        out.add(dotted_strand(i - 1), multiply(multiply(outer, complete_h(n - l - i, P)), power_sum(l + j, P)));
      }
    }
  }
  return out;
}

Reduction reduce_diagram(const StrandDiagram& d) {
  if (!d.is_staircase_like()) throw NonTraceable("reduce: " + d.to_text() + " is not staircase-like");
  Reduction result;
  std::map<std::pair<int, int>, PartialCombo> closed_forms;
  auto closed = [&](int m, int k) -> const PartialCombo& {
    auto it = closed_forms.find({m, k});
    if (it == closed_forms.end()) it = closed_forms.emplace(std::pair{m, k}, closed_form_single_crossing(m, k)).first;
    return it->second;
  };

  PartialCombo state;
  state.add(d, 0, SymFun::one(Basis::homogeneous));
  result.steps.push_back(state);
  StrandDiagram current = d;

  while (current.strands() > 0) {
    const int n = current.strands();
    std::vector<Crossing> crossings = current.crossings();
    PartialCombo next;
    if (!crossings.empty() && crossings.back().j == n) {
      const Crossing top = crossings.back();
      crossings.pop_back();
      if (!crossings.empty() && crossings.back().j > top.i) {
        throw NonTraceable("reduce: crossings [" + std::to_string(crossings.back().i) + "," +
                           std::to_string(crossings.back().j) + "] and [" + std::to_string(top.i) + "," +
                           std::to_string(top.j) + "] share more than one strand");
      }
      // Strands above top.i vanish; the ∂ moves to strand top.i, now right-most.
      StrandDiagram lower(top.i, std::move(crossings));
      for (const auto& [key, coeff] : state.terms()) {
        for (const auto& [ckey, ccoeff] : closed(top.size(), key.second).terms()) {
          next.add(lower, ckey.second, multiply(coeff, ccoeff));
        }
      }
      current = std::move(lower);
    } else {
      // Strand n is free: trace(∂_b |) = (b+1) h_{b+1}.
      StrandDiagram lower(n - 1, std::move(crossings));
      for (const auto& [key, coeff] : state.terms()) {
        const int b = key.second;
        next.add(lower, 0, multiply(coeff, h_of(b + 1) * mpq_class(b + 1)));
      }
      current = std::move(lower);
    }
    state = std::move(next);
    result.steps.push_back(state);
  }

  for (const auto& [key, coeff] : state.terms()) result.value += coeff;
  return result;
}

Reduction reduce_to_h(const StaircaseShape& shape, bool require_211) {
  if (require_211 && !is_211_avoiding(shape)) {
    throw InvalidInput("reduce_to_h: " + shape.to_string() + " contains the pattern 2+1+1");
  }
  return reduce_diagram(diagram_from_lambda(shape));
}

}  // namespace strandtrace
