#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "errors.hpp"

namespace pgl2 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Split type of a field whose inversions never split.
struct NeverSplits {};

/// The rationals, level 0 of every extension tower.
struct RationalField {
  using element_type = Rational;
  using split_type = NeverSplits;
  static constexpr int depth = 0;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_rational(const Rational& q) const { return q; }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }

  std::variant<Rational, NeverSplits> invert(const Rational& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero");
    Rational r = 1 / a;
    return r;
  }

  std::string format(const Rational& a) const { return a.get_str(); }
  // Coefficients that print without surrounding parentheses.
  bool is_atomic(const Rational& a) const { return sgn(a) >= 0; }

  bool operator==(const RationalField&) const { return true; }
};

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("not a rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace pgl2
