#ifndef EBC_FIELD_HPP
#define EBC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ebc {

/// A coefficient over the prime field F_p, canonically in [0, p).
using Coeff = std::int32_t;

/// The finite field F_q, q = p^k with q <= 256.
///
/// Elements are identified by an index in [0, q). The index encodes the
/// coefficient vector (c_0, ..., c_{k-1}) of the element
/// c_0 + c_1*t + ... + c_{k-1}*t^{k-1} in the generator-power basis, with
/// c_0 as the most significant base-p digit. Index order therefore equals
/// lexicographic order on coefficient vectors, which is the canonical
/// element order used everywhere downstream.
///
/// A Field is immutable after construction and cheap to copy (the
/// arithmetic tables are shared). All operations are pure.
class Field {
 public:
  using Elem = std::uint16_t;

  /// Builds F_p (k = 1) or F_{p^k} with a deterministically chosen modulus:
  /// the first monic irreducible of degree k in enumeration order.
  /// Throws std::invalid_argument for non-prime p, k < 1 or p^k > 256.
  static Field make(std::int64_t p, int k);

  /// Builds F_{p^k} with an explicit modulus, given as the coefficient list
  /// (constant term first, k+1 entries) of a monic irreducible polynomial
  /// of degree k over F_p. Throws if the modulus is reducible, non-monic
  /// or of the wrong degree.
  static Field make(std::int64_t p, int k, const std::vector<Coeff>& modulus);

  std::int64_t p() const noexcept;
  int k() const noexcept;
  std::int64_t q() const noexcept;

  /// Modulus coefficient list (empty for k = 1).
  const std::vector<Coeff>& modulus() const noexcept;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept;

  /// Embedding of an integer via the prime subfield, n -> (n mod p) * 1.
  Elem scalar(std::int64_t n) const noexcept;

  /// The generator t of the power basis; requires k >= 2.
  Elem gen() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error on inv(0).
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Coefficient vector (c_0, ..., c_{k-1}) of an element; entries in [0, p).
  std::vector<Coeff> coeffs(Elem a) const;
  /// Inverse of coeffs(); validates length and range.
  Elem from_coeffs(std::span<const Coeff> c) const;

  /// Fields compare equal when they have the same p, k and modulus.
  bool operator==(const Field& other) const noexcept;
  bool operator!=(const Field& other) const noexcept { return !(*this == other); }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace ebc

#endif  // EBC_FIELD_HPP
