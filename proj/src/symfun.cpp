#include "strandtrace/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "strandtrace/error.hpp"

namespace strandtrace {

std::string_view basis_letter(Basis b) noexcept {
  switch (b) {
    case Basis::powersum: return "p";
    case Basis::homogeneous: return "h";
    case Basis::elementary: return "e";
  }
  return "?";
}

Basis parse_basis(std::string_view letter) {
  if (letter == "p") return Basis::powersum;
  if (letter == "h") return Basis::homogeneous;
  if (letter == "e") return Basis::elementary;
  throw InvalidInput("unknown basis '" + std::string(letter) + "' (expected p, h or e)");
}

SymFun SymFun::monomial(Basis basis, const Partition& index, const mpq_class& coeff) {
  SymFun f(basis);
  f.add_term(index, coeff);
  return f;
}

mpq_class SymFun::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::optional<int> SymFun::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  // CanonicalOrder sorts by size first, so the last key has the largest degree.
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

void SymFun::add_term(const Partition& index, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void SymFun::require_same_basis(const SymFun& other) const {
  if (basis_ != other.basis_) {
    throw BasisMismatch("symmetric functions in different bases (" +
                        std::string(basis_letter(basis_)) + " vs " +
                        std::string(basis_letter(other.basis_)) + ")");
  }
}

SymFun& SymFun::operator+=(const SymFun& other) {
  require_same_basis(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& other) {
  require_same_basis(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

SymFun& SymFun::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scalar;
  return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) { return multiply(a, b); }

std::string SymFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || idx.empty()) os << mag.get_str() << (idx.empty() ? "" : " ");
    if (!idx.empty()) {
      os << basis_letter(basis_) << "[";
      for (std::size_t i = 0; i < idx.parts().size(); ++i) os << (i ? "," : "") << idx.parts()[i];
      os << "]";
    }
  }
  return os.str();
}

SymFun multiply(const SymFun& f, const SymFun& g) {
  if (f.basis() != g.basis()) {
    throw BasisMismatch("multiply: operands in different bases");
  }
  SymFun out(f.basis());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) out.add_term(a.merged(b), ca * cb);
  }
  return out;
}

mpz_class z_value(const Partition& lambda) {
  mpz_class z = 1;
  const auto& parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned long d = j - i;
    mpz_class pw, fact;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), d);
    mpz_fac_ui(fact.get_mpz_t(), d);
    z *= pw * fact;
    i = j;
  }
  return z;
}

namespace {

int sign_of(const Partition& lambda) { return ((lambda.size() - lambda.length()) % 2 == 0) ? 1 : -1; }

SymFun retag(const SymFun& f, Basis b) {
  SymFun out(b);
  for (const auto& [idx, c] : f.terms()) out.add_term(idx, c);
  return out;
}

// Generator caches. Entries are computed once and never mutated afterwards.
struct GeneratorCache {
  std::mutex mu;
  std::vector<SymFun> power_in_h;     // p_n expanded in h
  std::vector<SymFun> complete_in_p;  // h_n expanded in p
  std::vector<SymFun> elementary_in_p;
};

GeneratorCache& cache() {
  static GeneratorCache c;
  return c;
}

SymFun complete_in_p_uncached(int n, int sign_twist) {
  SymFun out(Basis::powersum);
  for (const Partition& lam : partitions_of(n)) {
    mpq_class c(1, z_value(lam));
    c.canonicalize();
    if (sign_twist && sign_of(lam) < 0) c = -c;
    out.add_term(lam, c);
  }
  return out;
}

}  // namespace

SymFun power_sum(int n, Basis in) {
  if (n < 0) return SymFun(in);
  if (n == 0) return SymFun::one(in);
  switch (in) {
    case Basis::powersum: return SymFun::monomial(in, Partition{n});
    case Basis::elementary: {
      // ω(p_n) = (−1)^{n−1} p_n and ω swaps the h and e tags.
      SymFun f = retag(power_sum(n, Basis::homogeneous), Basis::elementary);
      if (n % 2 == 0) f *= -1;
      return f;
    }
    case Basis::homogeneous: break;
  }
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto& table = c.power_in_h;
  if (table.empty()) table.push_back(SymFun::one(Basis::homogeneous));
  while (static_cast<int>(table.size()) <= n) {
    const int i = static_cast<int>(table.size());
    // p_i = i h_i − Σ_{j=1}^{i−1} h_{i−j} p_j
    SymFun pi = SymFun::monomial(Basis::homogeneous, Partition{i}, i);
    for (int j = 1; j < i; ++j) {
      pi -= multiply(SymFun::monomial(Basis::homogeneous, Partition{i - j}), table[static_cast<std::size_t>(j)]);
    }
    table.push_back(std::move(pi));
  }
  return table[static_cast<std::size_t>(n)];
}

SymFun complete_h(int n, Basis in) {
  if (n < 0) return SymFun(in);
  if (n == 0) return SymFun::one(in);
  if (in == Basis::homogeneous) return SymFun::monomial(in, Partition{n});
  if (in == Basis::elementary) return to_basis(complete_h(n, Basis::powersum), Basis::elementary);
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto& table = c.complete_in_p;
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(complete_in_p_uncached(static_cast<int>(table.size()), 0));
  }
  return table[static_cast<std::size_t>(n)];
}

namespace {

SymFun elementary_in_p(int n) {
  if (n == 0) return SymFun::one(Basis::powersum);
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto& table = c.elementary_in_p;
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(complete_in_p_uncached(static_cast<int>(table.size()), 1));
  }
  return table[static_cast<std::size_t>(n)];
}

// Expands every index partition of f as a product of generators of `target`.
template <typename Generator>
SymFun substitute(const SymFun& f, Basis target, Generator gen) {
  SymFun out(target);
  for (const auto& [idx, c] : f.terms()) {
    SymFun prod = SymFun::one(target);
    for (int part : idx.parts()) prod = multiply(prod, gen(part));
    prod *= c;
    out += prod;
  }
  return out;
}

}  // namespace

SymFun to_basis(const SymFun& f, Basis target) {
  const Basis from = f.basis();
  if (from == target) return f;
  if (from != Basis::powersum && target != Basis::powersum) {
    return to_basis(to_basis(f, Basis::powersum), target);
  }
  if (from == Basis::powersum) {
    return substitute(f, target, [target](int k) { return power_sum(k, target); });
  }
  if (from == Basis::homogeneous) {
    return substitute(f, target, [](int k) { return complete_h(k, Basis::powersum); });
  }
  return substitute(f, target, [](int k) { return elementary_in_p(k); });
}

SymFun omega(const SymFun& f) {
  switch (f.basis()) {
    case Basis::homogeneous: return retag(f, Basis::elementary);
    case Basis::elementary: return retag(f, Basis::homogeneous);
    case Basis::powersum: break;
  }
  SymFun out(Basis::powersum);
  for (const auto& [idx, c] : f.terms()) out.add_term(idx, sign_of(idx) < 0 ? mpq_class(-c) : c);
  return out;
}

HPositivity is_h_positive(const SymFun& f) {
  HPositivity result;
  result.h_expansion = to_basis(f, Basis::homogeneous);
  for (const auto& [idx, c] : result.h_expansion.terms()) {
    if (c >= 0) continue;
    if (!result.witness || idx < result.witness->index) result.witness = NegativeWitness{idx, c};
  }
  result.positive = !result.witness.has_value();
  return result;
}

mpq_class specialize_ones(const SymFun& f, unsigned m) {
  const SymFun p = to_basis(f, Basis::powersum);
  mpq_class total = 0;
  for (const auto& [idx, c] : p.terms()) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), m, static_cast<unsigned long>(idx.length()));
    total += c * pw;
  }
  return total;
}

bool double_sum_identity_check(int a, int b) {
  if (a < 0 || b < 0) throw InvalidInput("double_sum_identity_check: a, b must be nonnegative");
  const Basis P = Basis::powersum;
  SymFun lhs(P);
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      lhs += multiply(multiply(complete_h(a - i, P), complete_h(b - j, P)), power_sum(i + j, P));
    }
  }
  SymFun rhs = multiply(complete_h(a, P), complete_h(b, P)) * mpq_class(b + 1);
  for (int i = 1; i <= a; ++i) {
    rhs += multiply(complete_h(a - i, P), complete_h(b + i, P)) * mpq_class(b - a + 2 * i);
  }
  return lhs == rhs;
}

std::string fraction_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_fraction(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InvalidInput("malformed fraction '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace strandtrace
