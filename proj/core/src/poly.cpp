#include "ebc/poly.hpp"

#include <stdexcept>

namespace ebc {
namespace {

void trim(std::vector<Field::Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Field::Elem> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::constant(const Field& f, Field::Elem c) {
  (void)f;
  if (c == 0) return Poly();
  return Poly({c});
}

Poly Poly::monomial(const Field& f, Field::Elem c, int e) {
  (void)f;
  if (c == 0) return Poly();
  std::vector<Field::Elem> v(static_cast<std::size_t>(e) + 1, 0);
  v[static_cast<std::size_t>(e)] = c;
  return Poly(std::move(v));
}

int Poly::degree() const {
  if (c_.empty()) throw std::domain_error("poly: the zero polynomial has no degree");
  return static_cast<int>(c_.size()) - 1;
}

Field::Elem Poly::leading() const {
  if (c_.empty()) throw std::domain_error("poly: the zero polynomial has no leading coefficient");
  return c_.back();
}

Field::Elem Poly::coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Field::Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly poly_neg(const Field& f, const Poly& a) {
  std::vector<Field::Elem> r(a.coeffs());
  for (auto& c : r) c = f.neg(c);
  return Poly(std::move(r));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  return poly_add(f, a, poly_neg(f, b));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Field::Elem> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a.coeff(i), b.coeff(j)));
  }
  return Poly(std::move(r));
}

Poly poly_scale(const Field& f, Field::Elem s, const Poly& a) {
  std::vector<Field::Elem> r(a.coeffs());
  for (auto& c : r) c = f.mul(s, c);
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly: division by the zero polynomial");
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return {Poly(), a};

  const Field::Elem lead_inv = f.inv(b.leading());
  std::vector<Field::Elem> rem(a.coeffs());
  std::vector<Field::Elem> quot(rem.size() - b.coeffs().size() + 1, 0);

  for (std::size_t i = rem.size(); i-- >= b.coeffs().size();) {
    const Field::Elem c = f.mul(rem[i], lead_inv);
    if (c != 0) {
      const std::size_t shift = i - (b.coeffs().size() - 1);
      quot[shift] = c;
      for (std::size_t j = 0; j < b.coeffs().size(); ++j)
        rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b.coeff(j)));
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& b) {
  return poly_divmod(f, a, b).second;
}

Field::Elem poly_eval(const Field& f, const Poly& a, Field::Elem x) {
  Field::Elem acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = f.add(f.mul(acc, x), a.coeff(i));
  return acc;
}

Poly poly_gcd(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly: gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = poly_mod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return poly_scale(f, f.inv(r0.leading()), r0);
}

XgcdResult poly_xgcd(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly: xgcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(f), u1 = Poly();
  Poly v0 = Poly(), v1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(f, r0, r1);
    Poly u2 = poly_sub(f, u0, poly_mul(f, q, u1));
    Poly v2 = poly_sub(f, v0, poly_mul(f, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const Field::Elem s = f.inv(r0.leading());
  return {poly_scale(f, s, r0), poly_scale(f, s, u0), poly_scale(f, s, v0)};
}

bool poly_is_irreducible(const Field& f, const Poly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("poly: irreducibility is defined for degree >= 1");
  const int d = a.degree();
  for (int e = 1; e <= d / 2; ++e)
    for (const Poly& cand : poly_enumerate(f, e, /*monic=*/true))
      if (poly_mod(f, a, cand).is_zero()) return false;
  return true;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

int Factorization::big_omega() const {
  int n = 0;
  for (const auto& [p, m] : factors) n += m;
  return n;
}

Poly Factorization::expand(const Field& f) const {
  Poly r = Poly::constant(f, leading);
  for (const auto& [p, m] : factors)
    for (int i = 0; i < m; ++i) r = poly_mul(f, r, p);
  return r;
}

Factorization poly_factor(const Field& f, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("poly: cannot factor the zero polynomial");

  Factorization result;
  result.leading = a.leading();
  Poly rest = poly_scale(f, f.inv(a.leading()), a);

  // Trial division in (degree, lex) order. The smallest nontrivial monic
  // divisor of the remaining part is necessarily irreducible, so factors
  // come out sorted and need no separate irreducibility check.
  while (rest.degree() >= 1) {
    Poly divisor;
    for (int e = 1; e <= rest.degree() / 2 && divisor.is_zero(); ++e)
      for (const Poly& cand : poly_enumerate(f, e, /*monic=*/true))
        if (poly_mod(f, rest, cand).is_zero()) {
          divisor = cand;
          break;
        }
    if (divisor.is_zero()) divisor = rest;  // rest itself is irreducible

    int mult = 0;
    while (true) {
      auto [q, r] = poly_divmod(f, rest, divisor);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    result.factors.emplace_back(std::move(divisor), mult);
  }
  return result;
}

std::vector<Poly> poly_enumerate(const Field& f, int degree, bool monic) {
  if (degree < 0) throw std::invalid_argument("poly: enumeration degree must be >= 0");
  std::vector<Poly> out;
  const std::int64_t q = f.q();

  std::int64_t inner = 1;
  for (int i = 0; i < degree; ++i) inner *= q;

  auto lower_at = [&](std::int64_t idx) {
    std::vector<Field::Elem> c(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = degree - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<Field::Elem>(idx % q);
      idx /= q;
    }
    return c;
  };

  if (monic) {
    out.reserve(static_cast<std::size_t>(inner));
    for (std::int64_t idx = 0; idx < inner; ++idx) {
      auto c = lower_at(idx);
      c[static_cast<std::size_t>(degree)] = f.one();
      out.emplace_back(std::move(c));
    }
  } else {
    out.reserve(static_cast<std::size_t>(inner) * (q - 1));
    for (std::int64_t lead = 1; lead < q; ++lead)
      for (std::int64_t idx = 0; idx < inner; ++idx) {
        auto c = lower_at(idx);
        c[static_cast<std::size_t>(degree)] = static_cast<Field::Elem>(lead);
        out.emplace_back(std::move(c));
      }
  }
  return out;
}

}  // namespace ebc
