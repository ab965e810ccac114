#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strandtrace/partition.hpp"

namespace strandtrace {

/// Multiplicative bases of the ring of symmetric functions.
enum class Basis { powersum, homogeneous, elementary };

/// "p", "h" or "e".
std::string_view basis_letter(Basis b) noexcept;
Basis parse_basis(std::string_view letter);

/// A finite linear combination of basis elements p_λ / h_λ / e_λ with exact
/// rational coefficients.
///
/// Zero coefficients are never stored and every coefficient is kept in lowest
/// terms (mpq_class canonicalizes on every operation). The empty partition
/// indexes the unit, so p_0 = h_0 = e_0 = 1.
class SymFun {
 public:
  using Terms = std::map<Partition, mpq_class, CanonicalOrder>;

  explicit SymFun(Basis basis = Basis::powersum) : basis_(basis) {}

  static SymFun zero(Basis basis) { return SymFun(basis); }
  static SymFun one(Basis basis) { return monomial(basis, Partition{}); }
  static SymFun monomial(Basis basis, const Partition& index, const mpq_class& coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  mpq_class coefficient(const Partition& index) const;

  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> degree() const;

  /// Adds `coeff` to the coefficient of `index`, dropping the term if it cancels.
  void add_term(const Partition& index, const mpq_class& coeff);

  SymFun& operator+=(const SymFun& other);
  SymFun& operator-=(const SymFun& other);
  SymFun& operator*=(const mpq_class& scalar);

  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const mpq_class& s) { return a *= s; }
  friend SymFun operator*(const mpq_class& s, SymFun a) { return a *= s; }
  friend SymFun operator*(const SymFun& a, const SymFun& b);

  friend bool operator==(const SymFun& a, const SymFun& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "2 h[2,2] + 2 h[3,1] + 4 h[4]"; "0" when zero.
  std::string to_string() const;

 private:
  void require_same_basis(const SymFun& other) const;

  Basis basis_;
  Terms terms_;
};

/// Product in a multiplicative basis: index partitions merge, coefficients multiply.
/// Throws BasisMismatch when the bases differ.
SymFun multiply(const SymFun& f, const SymFun& g);

/// ∏ i^{d_i} d_i!, where d_i is the multiplicity of i in λ.
mpz_class z_value(const Partition& lambda);

/// Single generators expressed in a chosen basis. Negative indices give zero;
/// index 0 gives the unit.
SymFun complete_h(int n, Basis in);
SymFun power_sum(int n, Basis in);

/// Re-expresses f in the target basis.
///
/// p → h uses Newton's recurrence i·h_i = Σ_{j=1}^{i} h_{i−j} p_j solved for p_i;
/// h → p uses h_n = Σ_{λ⊢n} p_λ / z_λ; the e basis is reached through ω.
SymFun to_basis(const SymFun& f, Basis target);

/// The involution with ω(e_λ) = h_λ. On the power-sum basis p_λ picks up the
/// sign (−1)^{|λ|−ℓ(λ)}.
SymFun omega(const SymFun& f);

struct NegativeWitness {
  Partition index;
  mpq_class coeff;
};

struct HPositivity {
  bool positive = true;
  SymFun h_expansion{Basis::homogeneous};
  /// Lexicographically smallest index with a negative coefficient, when not positive.
  std::optional<NegativeWitness> witness;
};

HPositivity is_h_positive(const SymFun& f);

/// Evaluates f at x_1 = ... = x_m = 1 and all other variables 0 (p_λ ↦ m^{ℓ(λ)}).
mpq_class specialize_ones(const SymFun& f, unsigned m);

/// Checks Σ_{i≤a} Σ_{j≤b} h_{a−i} h_{b−j} p_{i+j} = (b+1) h_a h_b + Σ_{i=1}^{a} (b−a+2i) h_{a−i} h_{b+i}
/// by expanding both sides in the power-sum basis.
bool double_sum_identity_check(int a, int b);

/// Formats a rational as "num/den", always with an explicit denominator.
std::string fraction_string(const mpq_class& q);
/// Accepts "num/den" or a bare integer.
mpq_class parse_fraction(std::string_view text);

}  // namespace strandtrace
