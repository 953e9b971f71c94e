#ifndef EBC_POLY_HPP
#define EBC_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ebc/field.hpp"

namespace ebc {

/// Univariate polynomial over F_q in canonical form: coeffs[i] is the
/// coefficient of x^i, the empty vector is the zero polynomial and the
/// last entry of a nonzero polynomial is nonzero. The zero polynomial has
/// no degree; degree() throws on it rather than returning -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Field::Elem> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(const Field& f, Field::Elem c);
  static Poly one(const Field& f) { return constant(f, f.one()); }
  /// The monomial c * x^e.
  static Poly monomial(const Field& f, Field::Elem c, int e);
  static Poly x(const Field& f) { return monomial(f, f.one(), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Throws std::domain_error on the zero polynomial.
  int degree() const;
  Field::Elem leading() const;
  /// Coefficient of x^i; zero beyond the degree.
  Field::Elem coeff(std::size_t i) const noexcept;
  const std::vector<Field::Elem>& coeffs() const noexcept { return c_; }

  bool operator==(const Poly& other) const noexcept { return c_ == other.c_; }
  bool operator!=(const Poly& other) const noexcept { return c_ != other.c_; }

 private:
  std::vector<Field::Elem> c_;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_neg(const Field& f, const Poly& a);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, Field::Elem s, const Poly& a);

/// (quotient, remainder) with deg r < deg b. Throws std::domain_error when
/// b is zero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& b);

Field::Elem poly_eval(const Field& f, const Poly& a, Field::Elem x);

/// Monic gcd. Throws std::domain_error on gcd(0, 0).
Poly poly_gcd(const Field& f, const Poly& a, const Poly& b);

struct XgcdResult {
  Poly g;  // monic gcd
  Poly u;
  Poly v;  // u*a + v*b == g
};
XgcdResult poly_xgcd(const Field& f, const Poly& a, const Poly& b);

/// Trial division against all monic polynomials of degree <= deg(a)/2.
/// Throws std::invalid_argument on constant or zero input.
bool poly_is_irreducible(const Field& f, const Poly& a);

/// Total order: degree first (zero polynomial smallest), then lexicographic
/// on the coefficient tuple with the constant term most significant.
bool poly_less(const Poly& a, const Poly& b);

/// f = leading * prod factors[i].first ^ factors[i].second, with monic
/// irreducible factors sorted by poly_less. Constants have an empty list.
struct Factorization {
  Field::Elem leading = 0;
  std::vector<std::pair<Poly, int>> factors;

  /// Number of prime factors with multiplicity.
  int big_omega() const;
  /// Number of distinct prime factors.
  int small_omega() const { return static_cast<int>(factors.size()); }
  Poly expand(const Field& f) const;
};

/// Complete factorization by trial division in enumeration order.
/// Throws std::invalid_argument on the zero polynomial.
Factorization poly_factor(const Field& f, const Poly& a);

/// All monic (or all nonzero-lead, when monic is false) polynomials of the
/// exact degree, in canonical order. Degree 0 and monic yields just 1.
std::vector<Poly> poly_enumerate(const Field& f, int degree, bool monic);

}  // namespace ebc

#endif  // EBC_POLY_HPP
