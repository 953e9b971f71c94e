#include "ebc/format.hpp"

#include <cctype>

namespace ebc {
namespace {

// True when the element lies in the prime subfield (no t-part).
bool is_scalar(const Field& f, Field::Elem e) {
  const auto c = f.coeffs(e);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

void append_term(std::string& out, const std::string& coeff, char var, int exp) {
  if (exp == 0) {
    out += coeff.empty() ? std::string("1") : coeff;
    return;
  }
  if (!coeff.empty()) {
    out += coeff;
    out += '*';
  }
  out += var;
  if (exp != 1) {
    out += '^';
    out += std::to_string(exp);
  }
}

// Prime-coefficient polynomial print over an explicit variable. Used for
// t-polynomials and as the k = 1 case of x.
std::string print_prime_poly(const std::vector<Coeff>& c, char var) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Coeff v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    append_term(out, (v == 1 && i != 0) ? "" : std::to_string(v), var, i);
  }
  return out.empty() ? "0" : out;
}

// Recursive-descent parser for the term grammar. `offset` shifts reported
// error positions so nested coefficient parses point into the full input.
class Parser {
 public:
  Parser(const Field& f, std::string_view text, char var, std::size_t offset)
      : f_(f), text_(text), var_(var), offset_(offset) {}

  Poly parse() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    Poly result = parse_term();
    skip_ws();
    while (!eof()) {
      if (peek() != '+') fail("expected '+'");
      ++pos_;
      result = poly_add(f_, result, parse_term());
      skip_ws();
    }
    return result;
  }

 private:
  const Field& f_;
  std::string_view text_;
  char var_;
  std::size_t offset_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, offset_ + pos_);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (pos_ - start > 17) fail("integer literal too long");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  // Bracketed extension-field coefficient: a t-polynomial over F_p.
  Field::Elem parse_bracket_elem() {
    const std::size_t start = pos_;
    if (f_.k() < 2) fail("bracketed coefficients require an extension field");
    ++pos_;  // consume '['
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos)
      throw ParseError("unterminated '['", offset_ + start);
    Parser inner(f_, text_.substr(pos_, close - pos_), 't', offset_ + pos_);
    const Poly tpoly = inner.parse();
    pos_ = close + 1;
    if (!tpoly.is_zero() && tpoly.degree() >= f_.k())
      throw ParseError("coefficient degree exceeds the extension degree", offset_ + start);
    std::vector<Coeff> c(static_cast<std::size_t>(f_.k()), 0);
    for (std::size_t i = 0; i < tpoly.coeffs().size(); ++i)
      c[i] = f_.coeffs(tpoly.coeff(i))[0];
    return f_.from_coeffs(c);
  }

  Poly parse_term() {
    skip_ws();
    if (eof()) fail("expected a term");

    bool have_coeff = false;
    Field::Elem coeff = f_.one();

    if (peek() == '[') {
      if (var_ != 'x') fail("brackets may not nest");
      coeff = parse_bracket_elem();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = f_.scalar(parse_int());
      have_coeff = true;
    }

    skip_ws();
    bool have_var = false;
    int exp = 0;
    if (!eof() && (peek() == '*' || peek() == var_)) {
      if (peek() == '*') {
        if (!have_coeff) fail("unexpected '*'");
        ++pos_;
        skip_ws();
        if (eof() || peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
      }
      ++pos_;  // consume the variable
      have_var = true;
      exp = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        const std::int64_t e = parse_int();
        if (e > 10000) fail("exponent too large");
        exp = static_cast<int>(e);
      }
    }

    if (!have_coeff && !have_var)
      fail(std::string("expected a coefficient or '") + var_ + "'");
    return Poly::monomial(f_, coeff, have_var ? exp : 0);
  }
};

Poly parse_poly_at(const Field& f, std::string_view text, char var, std::size_t offset) {
  Parser parser(f, text, var, offset);
  return parser.parse();
}

}  // namespace

std::string print_field_elem(const Field& f, Field::Elem e) {
  return print_prime_poly(f.coeffs(e), 't');
}

std::string print_poly(const Field& f, const Poly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const Field::Elem c = a.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string coeff;
    if (c != f.one() || i == 0) {
      if (is_scalar(f, c))
        coeff = std::to_string(f.coeffs(c)[0]);
      else
        coeff = "[" + print_field_elem(f, c) + "]";
    }
    append_term(out, coeff, var, i);
  }
  return out;
}

Poly parse_poly(const Field& f, std::string_view text, char var) {
  return parse_poly_at(f, text, var, 0);
}

std::pair<Field, Poly> parse_designation(std::string_view text) {
  const std::size_t sep = text.find(';');
  if (sep == std::string_view::npos)
    throw ParseError("expected ';' between q= and f=", text.size());

  const std::string_view qpart = text.substr(0, sep);
  const std::string_view fpart = text.substr(sep + 1);

  if (qpart.substr(0, 2) != "q=") throw ParseError("designation must start with 'q='", 0);
  Field field = parse_field_designation(qpart.substr(2));

  if (fpart.substr(0, 2) != "f=") throw ParseError("expected 'f=' after ';'", sep + 1);
  Poly modulus = parse_poly_at(field, fpart.substr(2), 'x', sep + 3);
  return {std::move(field), std::move(modulus)};
}

std::string print_designation(const Field& f, const Poly& modulus) {
  return "q=" + std::to_string(f.p()) + "^" + std::to_string(f.k()) +
         ";f=" + print_poly(f, modulus);
}

Field parse_field_designation(std::string_view text) {
  const auto read_int = [&](std::string_view s, std::size_t at) -> std::int64_t {
    if (s.empty()) throw ParseError("expected an integer", at);
    std::int64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected an integer", at + i);
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError("field parameter too large", at);
    }
    return v;
  };

  const std::size_t caret = text.find('^');
  if (caret == std::string_view::npos) {
    return Field::make(read_int(text, 0), 1);
  }
  const std::int64_t p = read_int(text.substr(0, caret), 0);
  const std::int64_t k = read_int(text.substr(caret + 1), caret + 1);
  return Field::make(p, static_cast<int>(k));
}

}  // namespace ebc
