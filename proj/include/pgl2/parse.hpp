#pragma once

// Text input: binary forms in x, y with rational coefficients and an optional
// field generator t, and extension moduli in t.
//
//   form   := term (('+' | '-') term)*
//   term   := ['+' | '-'] factor ('*'? factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | 'x' | 'y' | 't' | '(' form ')'

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "binary_form.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace pgl2 {

/// Sparse polynomial in x, y, t over Q; keys are exponent triples.
using Monomials = std::map<std::array<int, 3>, Rational>;

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string text) : s_(std::move(text)) {}

  Monomials parse() {
    Monomials m = form();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return m;
  }

 private:
  static constexpr int kMaxExponent = 4096;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 't' || c == '(';
  }

  static Monomials add(Monomials a, const Monomials& b, int sign) {
    for (const auto& [k, v] : b) {
      Rational& slot = a[k];
      slot += sign > 0 ? v : Rational(-v);
      if (sgn(slot) == 0) a.erase(k);
    }
    return a;
  }
  static Monomials mul(const Monomials& a, const Monomials& b) {
    Monomials r;
    for (const auto& [ka, va] : a)
      for (const auto& [kb, vb] : b) {
        const std::array<int, 3> k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
        Rational& slot = r[k];
        slot += va * vb;
        if (sgn(slot) == 0) r.erase(k);
      }
    return r;
  }

  Monomials form() {
    Monomials acc = term();
    for (;;) {
      if (accept('+')) acc = add(std::move(acc), term(), +1);
      else if (accept('-')) acc = add(std::move(acc), term(), -1);
      else return acc;
    }
  }

  Monomials term() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    Monomials acc = factor();
    for (;;) {
      if (accept('*')) acc = mul(acc, factor());
      else if (at_atom()) acc = mul(acc, factor());
      else break;
    }
    if (sign < 0)
      for (auto& [k, v] : acc) v = -v;
    return acc;
  }

  Monomials factor() {
    Monomials base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 5 || std::stoi(digits) > kMaxExponent) fail("exponent too large");
    int e = std::stoi(digits);
    Monomials r{{{0, 0, 0}, Rational(1)}};
    while (e-- > 0) r = mul(r, base);
    return r;
  }

  Monomials atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Monomials inner = form();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 't') {
      ++pos_;
      std::array<int, 3> k{0, 0, 0};
      k[c == 'x' ? 0 : c == 'y' ? 1 : 2] = 1;
      return {{k, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        const std::string den = s_.substr(dstart, pos_ - dstart);
        if (Integer(den) == 0) fail("zero denominator");
        lit += "/" + den;
      }
      Monomials r;
      const Rational q = rational_from_string(lit);
      if (sgn(q) != 0) r[{0, 0, 0}] = q;
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline std::string monomial_text(const std::array<int, 3>& k) {
  std::string out;
  const char* names = "xyt";
  for (int i = 0; i < 3; ++i) {
    if (k[static_cast<std::size_t>(i)] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (k[static_cast<std::size_t>(i)] > 1) out += "^" + std::to_string(k[static_cast<std::size_t>(i)]);
  }
  return out.empty() ? "1" : out;
}

// Field element for a polynomial in t given by (power, coefficient) pairs.
inline Rational from_t_poly(const RationalField&, const std::map<int, Rational>& c) {
  for (const auto& [e, v] : c)
    if (e > 0) throw ParseError("the generator t is used but no --minpoly was given");
  auto it = c.find(0);
  return it == c.end() ? Rational(0) : it->second;
}

template <class Base>
typename AlgebraicField<Base>::element_type from_t_poly(const AlgebraicField<Base>& f,
                                                        const std::map<int, Rational>& c) {
  const Base& b = f.base();
  int top = 0;
  for (const auto& [e, v] : c) top = std::max(top, e);
  std::vector<typename Base::element_type> coeffs(static_cast<std::size_t>(top) + 1, b.zero());
  for (const auto& [e, v] : c) coeffs[static_cast<std::size_t>(e)] = b.from_rational(v);
  return f.from_poly(Poly<Base>(b, std::move(coeffs)));
}

}  // namespace detail

inline Monomials parse_expression(const std::string& text) { return detail::ExpressionParser(text).parse(); }

/// An extension modulus: a nonconstant polynomial in t alone.
inline Poly<RationalField> parse_minpoly(const std::string& text) {
  const Monomials m = parse_expression(text);
  int top = 0;
  for (const auto& [k, v] : m) {
    if (k[0] || k[1]) throw ParseError("minpoly must be a polynomial in t only, found " + detail::monomial_text(k));
    top = std::max(top, k[2]);
  }
  if (top < 1) throw ParseError("minpoly must be nonconstant: \"" + text + "\"");
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
  for (const auto& [k, v] : m) c[static_cast<std::size_t>(k[2])] = v;
  return Poly<RationalField>(RationalField{}, std::move(c));
}

/// The field Q(t)/(minpoly); the modulus must be squarefree.
inline NumberField number_field_from_text(const std::string& minpoly) {
  try {
    return NumberField(RationalField{}, parse_minpoly(minpoly), "t");
  } catch (const DomainError& e) {
    throw FieldError(e.what());
  }
}

/// A homogeneous form of degree >= 1 over the given field.
template <class Field>
BinaryForm<Field> parse_form(const std::string& text, const Field& field) {
  const Monomials m = parse_expression(text);
  if (m.empty()) throw ParseError("the form is identically zero: \"" + text + "\"");
  // Total degree in x, y of each monomial.
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& [k, v] : m) by_degree[k[0] + k[1]].push_back(detail::monomial_text(k));
  if (by_degree.size() > 1) {
    std::string msg = "form is not homogeneous in x, y:";
    for (const auto& [deg, monos] : by_degree) {
      msg += " degree " + std::to_string(deg) + " {";
      for (std::size_t i = 0; i < monos.size(); ++i) msg += (i ? ", " : "") + monos[i];
      msg += "}";
    }
    throw ParseError(msg);
  }
  const int d = by_degree.begin()->first;
  if (d < 1) throw ParseError("the form has degree 0: \"" + text + "\"");
  std::vector<std::map<int, Rational>> coeff(static_cast<std::size_t>(d) + 1);
  for (const auto& [k, v] : m) coeff[static_cast<std::size_t>(k[1])][k[2]] = v;
  std::vector<typename Field::element_type> a;
  for (const auto& c : coeff) a.push_back(detail::from_t_poly(field, c));
  bool any = false;
  for (const auto& c : a) any = any || !field.is_zero(c);
  if (!any) throw ParseError("the form vanishes in the given field: \"" + text + "\"");
  return BinaryForm<Field>(field, std::move(a));
}

}  // namespace pgl2
