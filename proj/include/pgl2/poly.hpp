#pragma once

// Dense univariate polynomials over an exact field, with the gcd machinery
// needed by the rest of the library: division with remainder, exact
// division, monic Euclidean gcd and Yun's squarefree decomposition.
//
// Every routine that must invert a leading coefficient returns a
// Maybe<Field, T>: either the result or the field's split_type. Over the
// rationals the split alternative is never produced; over an algebraic
// extension with a reducible modulus it carries the two coprime factors of
// the modulus exposed by the zero divisor (dynamic evaluation).

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pgl2 {

template <class Field>
using SplitOf = typename Field::split_type;

template <class Field, class T>
using Maybe = std::variant<T, SplitOf<Field>>;

template <class T, class S>
bool is_split(const std::variant<T, S>& m) {
  return m.index() == 1;
}

/// Extracts the value, turning a split into a FieldError. Used where the
/// caller cannot branch (for instance when the split would be a split of the
/// user's input field).
template <class T, class S>
T unwrap(std::variant<T, S>&& m, const char* where) {
  if (m.index() == 1)
    throw FieldError(std::string(where) + ": modulus is reducible (zero divisor met)");
  return std::get<0>(std::move(m));
}

template <class T, class S>
T unwrap(const std::variant<T, S>& m, const char* where) {
  if (m.index() == 1)
    throw FieldError(std::string(where) + ": modulus is reducible (zero divisor met)");
  return std::get<0>(m);
}

// Propagates the split alternative of a Maybe to the enclosing function.
#define PGL2_TRY(lhs, expr)                                       \
  auto lhs##_maybe_ = (expr);                                     \
  if (lhs##_maybe_.index() == 1) return std::get<1>(std::move(lhs##_maybe_)); \
  auto lhs = std::get<0>(std::move(lhs##_maybe_))

template <class Field>
class Poly {
 public:
  using Elem = typename Field::element_type;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const Field& f, Elem c) { return Poly(f, {std::move(c)}); }
  static Poly variable(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly monomial(const Field& f, Elem c, int k) {
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, f.zero());
    v[static_cast<std::size_t>(k)] = std::move(c);
    return Poly(f, std::move(v));
  }
  /// Builds from rational coefficients, lowest degree first.
  static Poly from_rationals(const Field& f, const std::vector<Rational>& q) {
    std::vector<Elem> v;
    v.reserve(q.size());
    for (const auto& x : q) v.push_back(f.from_rational(x));
    return Poly(f, std::move(v));
  }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Elem& lead() const { return c_.back(); }

  Elem coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
  }

  Elem operator()(const Elem& x) const {
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * field_.from_rational(Rational(static_cast<long>(i))));
    return Poly(field_, std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(a.field_) - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.field_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Elem& s) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return Poly(field_, std::move(r));
  }

  Poly pow(int e) const {
    Poly r = constant(field_, field_.one());
    Poly b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Multiplies by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(static_cast<std::size_t>(k), field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string format(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Elem& c = c_[static_cast<std::size_t>(i)];
      if (field_.is_zero(c)) continue;
      std::string cs = field_.format(c);
      bool neg = !cs.empty() && cs[0] == '-' && field_.is_atomic(-c);
      if (neg) cs = field_.format(-c);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      bool unit = (cs == "1");
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        out += field_.is_atomic(neg ? -c : c) ? cs : "(" + cs + ")";
      } else if (unit) {
        out += mono;
      } else {
        out += (field_.is_atomic(neg ? -c : c) ? cs : "(" + cs + ")") + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<Elem> c_;
};

template <class Field>
Maybe<Field, std::pair<Poly<Field>, Poly<Field>>> divrem(const Poly<Field>& a,
                                                         const Poly<Field>& b) {
  using Elem = typename Field::element_type;
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& f = a.field();
  PGL2_TRY(inv, f.invert(b.lead()));
  if (a.degree() < b.degree()) return std::pair{Poly<Field>(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  for (int k = a.degree(); k >= db; --k) {
    const Elem& top = r[static_cast<std::size_t>(k)];
    if (f.is_zero(top)) continue;
    Elem t = top * inv;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(k - db + i)];
      slot = slot - t * bc[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return std::pair{Poly<Field>(f, std::move(q)), Poly<Field>(f, std::move(r))};
}

template <class Field>
Maybe<Field, Poly<Field>> make_monic(const Poly<Field>& p) {
  if (p.is_zero()) return p;
  PGL2_TRY(inv, p.field().invert(p.lead()));
  return p.scaled(inv);
}

/// Monic gcd. Throws DomainError when both inputs are zero.
template <class Field>
Maybe<Field, Poly<Field>> poly_gcd(const Poly<Field>& f, const Poly<Field>& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  PGL2_TRY(a0, make_monic(f));
  PGL2_TRY(b0, make_monic(g));
  Poly<Field> a = std::move(a0), b = std::move(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    PGL2_TRY(qr, divrem(a, b));
    PGL2_TRY(r, make_monic(qr.second));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Quotient f/g; throws NotDivisibleError on a nonzero remainder.
template <class Field>
Maybe<Field, Poly<Field>> poly_exact_divide(const Poly<Field>& f, const Poly<Field>& g) {
  if (g.is_zero()) throw DomainError("exact division by zero polynomial");
  PGL2_TRY(qr, divrem(f, g));
  if (!qr.second.is_zero())
    throw NotDivisibleError("not divisible: (" + f.format() + ") / (" + g.format() + ")");
  return std::move(qr.first);
}

template <class Field>
struct SquarefreeFactor {
  int multiplicity;
  Poly<Field> factor;  // monic, squarefree, nonconstant
};

/// Yun's squarefree decomposition (characteristic 0). The product of
/// factor^multiplicity equals f up to its leading coefficient; output is
/// sorted by multiplicity.
template <class Field>
Maybe<Field, std::vector<SquarefreeFactor<Field>>> yun_squarefree(const Poly<Field>& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor<Field>> out;
  if (f.degree() == 0) return out;
  Poly<Field> df = f.derivative();
  PGL2_TRY(a0, poly_gcd(f, df));
  PGL2_TRY(b, poly_exact_divide(f, a0));
  PGL2_TRY(c, poly_exact_divide(df, a0));
  Poly<Field> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    PGL2_TRY(a, poly_gcd(b, d));
    PGL2_TRY(bn, poly_exact_divide(b, a));
    PGL2_TRY(cn, poly_exact_divide(d, a));
    if (a.degree() > 0) out.push_back({i, a});
    b = std::move(bn);
    d = cn - b.derivative();
  }
  return out;
}

}  // namespace pgl2
