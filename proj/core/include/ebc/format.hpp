#ifndef EBC_FORMAT_HPP
#define EBC_FORMAT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ebc/field.hpp"
#include "ebc/poly.hpp"

namespace ebc {

/// Parse failure carrying the byte offset into the original input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// Renders a polynomial in the text wire format: terms `c*x^e` joined by
/// `+`, descending exponents, coefficient 1 and exponent 1 omitted, zero
/// printed as `0`. Extension-field coefficients outside the prime subfield
/// are bracketed t-polynomials, e.g. `x^2+[t+1]*x+[t]`.
std::string print_poly(const Field& f, const Poly& a, char var = 'x');

/// Renders a field element as a t-polynomial without brackets (`t+1`, `2`).
std::string print_field_elem(const Field& f, Field::Elem e);

/// Parses the wire format back into a polynomial. Whitespace is ignored.
/// Coefficients may repeat an exponent; they accumulate. Throws ParseError.
Poly parse_poly(const Field& f, std::string_view text, char var = 'x');

/// Ring designation `q=<p>^<k>;f=<polynomial>`; `^<k>` defaults to 1 on
/// input and is always printed.
std::pair<Field, Poly> parse_designation(std::string_view text);
std::string print_designation(const Field& f, const Poly& modulus);

/// Field designation `<p>^<k>` (or just `<p>`), as used by the sweep CLI.
Field parse_field_designation(std::string_view text);

}  // namespace ebc

#endif  // EBC_FORMAT_HPP
