#include "ebc/field.hpp"

#include <stdexcept>
#include <string>

namespace ebc {
namespace {

constexpr std::int64_t kMaxQ = 256;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p on raw coefficient vectors
// (constant term first, trailing zeros trimmed). Only used to build the
// field tables and to validate/generate the extension modulus.
using PPoly = std::vector<Coeff>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(std::int64_t p, const PPoly& a, const PPoly& b) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<Coeff>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  ptrim(r);
  return r;
}

// Remainder of a modulo monic b.
PPoly pmod(std::int64_t p, PPoly a, const PPoly& b) {
  ptrim(a);
  while (a.size() >= b.size()) {
    const std::int64_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::int64_t v = (a[shift + i] - c * b[i]) % p;
      if (v < 0) v += p;
      a[shift + i] = static_cast<Coeff>(v);
    }
    ptrim(a);
  }
  return a;
}

// The idx-th monic polynomial of degree d over F_p, in lexicographic order
// on the coefficient tuple (c_0, ..., c_{d-1}) with c_0 most significant.
PPoly monic_at(std::int64_t p, int d, std::int64_t idx) {
  PPoly r(static_cast<std::size_t>(d) + 1, 0);
  r[d] = 1;
  for (int i = d - 1; i >= 0; --i) {
    r[i] = static_cast<Coeff>(idx % p);
    idx /= p;
  }
  return r;
}

bool pdivides(std::int64_t p, const PPoly& divisor, const PPoly& a) {
  return pmod(p, a, divisor).empty();
}

bool pirreducible(std::int64_t p, const PPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  for (int e = 1; e <= d / 2; ++e) {
    std::int64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx)
      if (pdivides(p, monic_at(p, e, idx), f)) return false;
  }
  return true;
}

}  // namespace

struct Field::Impl {
  std::int64_t p = 0;
  int k = 1;
  std::int64_t q = 0;
  std::vector<Coeff> modulus;  // empty when k == 1

  std::vector<Elem> add_table;  // q*q
  std::vector<Elem> mul_table;  // q*q
  std::vector<Elem> neg_table;  // q
  std::vector<Elem> inv_table;  // q; inv_table[0] unused

  // index <-> coefficient vector, c_0 most significant base-p digit
  std::vector<Coeff> decode(Elem a) const {
    std::vector<Coeff> c(static_cast<std::size_t>(k));
    std::int64_t v = a;
    for (int j = k - 1; j >= 0; --j) {
      c[j] = static_cast<Coeff>(v % p);
      v /= p;
    }
    return c;
  }

  Elem encode(std::span<const Coeff> c) const {
    std::int64_t v = 0;
    for (int j = 0; j < k; ++j) v = v * p + c[j];
    return static_cast<Elem>(v);
  }

  void build_tables() {
    add_table.resize(static_cast<std::size_t>(q) * q);
    mul_table.resize(static_cast<std::size_t>(q) * q);
    neg_table.resize(static_cast<std::size_t>(q));
    inv_table.assign(static_cast<std::size_t>(q), 0);

    PPoly mod = modulus;
    if (k == 1) mod = {0, 1};  // unused; keep pmod well-formed

    for (std::int64_t a = 0; a < q; ++a) {
      const std::vector<Coeff> ca = decode(static_cast<Elem>(a));
      for (std::int64_t b = 0; b <= a; ++b) {
        const std::vector<Coeff> cb = decode(static_cast<Elem>(b));

        std::vector<Coeff> sum(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) sum[j] = static_cast<Coeff>((ca[j] + cb[j]) % p);
        const Elem s = encode(sum);
        add_table[static_cast<std::size_t>(a) * q + b] = s;
        add_table[static_cast<std::size_t>(b) * q + a] = s;

        PPoly prod = pmul(p, ca, cb);
        if (k > 1) prod = pmod(p, std::move(prod), modulus);
        prod.resize(static_cast<std::size_t>(k), 0);
        const Elem m = encode(prod);
        mul_table[static_cast<std::size_t>(a) * q + b] = m;
        mul_table[static_cast<std::size_t>(b) * q + a] = m;
      }
    }
    for (std::int64_t a = 0; a < q; ++a) {
      std::vector<Coeff> c = decode(static_cast<Elem>(a));
      for (int j = 0; j < k; ++j) c[j] = static_cast<Coeff>((p - c[j]) % p);
      neg_table[static_cast<std::size_t>(a)] = encode(c);
    }
    const Elem one = encode(make_one());
    for (std::int64_t a = 1; a < q; ++a)
      for (std::int64_t b = 1; b < q; ++b)
        if (mul_table[static_cast<std::size_t>(a) * q + b] == one) {
          inv_table[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
          break;
        }
  }

  std::vector<Coeff> make_one() const {
    std::vector<Coeff> c(static_cast<std::size_t>(k), 0);
    c[0] = 1;
    return c;
  }
};

Field Field::make(std::int64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  if (k == 1) return make(p, 1, {});
  // First monic irreducible of degree k in enumeration order.
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxQ) throw std::invalid_argument("field: p^k exceeds the supported limit 256");
  }
  for (std::int64_t idx = 0; idx < count; ++idx) {
    PPoly cand = monic_at(p, k, idx);
    if (pirreducible(p, cand)) return make(p, k, cand);
  }
  throw std::logic_error("field: no irreducible modulus found");  // unreachable
}

Field Field::make(std::int64_t p, int k, const std::vector<Coeff>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be >= 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = 1;
  for (int i = 0; i < k; ++i) {
    impl->q *= p;
    if (impl->q > kMaxQ) throw std::invalid_argument("field: p^k exceeds the supported limit 256");
  }

  if (k == 1) {
    if (!modulus.empty()) throw std::invalid_argument("field: prime field takes no modulus");
  } else {
    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
      throw std::invalid_argument("field: modulus must be monic of degree k");
    for (Coeff c : modulus)
      if (c < 0 || c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
    if (!pirreducible(p, modulus))
      throw std::invalid_argument("field: modulus is reducible over F_p");
    impl->modulus = modulus;
  }

  impl->build_tables();
  return Field(std::move(impl));
}

std::int64_t Field::p() const noexcept { return impl_->p; }
int Field::k() const noexcept { return impl_->k; }
std::int64_t Field::q() const noexcept { return impl_->q; }
const std::vector<Coeff>& Field::modulus() const noexcept { return impl_->modulus; }

Field::Elem Field::one() const noexcept { return impl_->encode(impl_->make_one()); }

Field::Elem Field::scalar(std::int64_t n) const noexcept {
  std::vector<Coeff> c(static_cast<std::size_t>(impl_->k), 0);
  std::int64_t v = n % impl_->p;
  if (v < 0) v += impl_->p;
  c[0] = static_cast<Coeff>(v);
  return impl_->encode(c);
}

Field::Elem Field::gen() const {
  if (impl_->k < 2) throw std::domain_error("field: prime field has no power-basis generator");
  std::vector<Coeff> c(static_cast<std::size_t>(impl_->k), 0);
  c[1] = 1;
  return impl_->encode(c);
}

Field::Elem Field::add(Elem a, Elem b) const {
  return impl_->add_table[static_cast<std::size_t>(a) * impl_->q + b];
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::neg(Elem a) const { return impl_->neg_table[a]; }

Field::Elem Field::mul(Elem a, Elem b) const {
  return impl_->mul_table[static_cast<std::size_t>(a) * impl_->q + b];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return impl_->inv_table[a];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Coeff> Field::coeffs(Elem a) const { return impl_->decode(a); }

Field::Elem Field::from_coeffs(std::span<const Coeff> c) const {
  if (static_cast<int>(c.size()) != impl_->k)
    throw std::invalid_argument("field: coefficient vector must have length k");
  for (Coeff v : c)
    if (v < 0 || v >= impl_->p) throw std::invalid_argument("field: coefficient out of range");
  return impl_->encode(c);
}

bool Field::operator==(const Field& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
         impl_->modulus == other.impl_->modulus;
}

}  // namespace ebc
