#pragma once

// Binary forms F(x, y) = a_0 x^d + a_1 x^{d-1} y + ... + a_d y^d over an
// exact field. Polynomial work happens in the affine chart y = 1; the point
// at infinity (1:0) is tracked by the number of leading zero coefficients.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "profile.hpp"

namespace pgl2 {

template <class Field>
class BinaryForm {
 public:
  using Elem = typename Field::element_type;

  /// coeffs[i] is the coefficient of x^{d-i} y^i.
  BinaryForm(Field field, std::vector<Elem> coeffs)
      : field_(std::move(field)), a_(std::move(coeffs)) {
    if (a_.empty()) throw DomainError("binary form needs at least one coefficient");
    bool any = false;
    for (const auto& c : a_) any = any || !field_.is_zero(c);
    if (!any) throw DomainError("binary form is identically zero");
  }

  static BinaryForm from_rationals(const Field& f, const std::vector<Rational>& q) {
    std::vector<Elem> v;
    for (const auto& x : q) v.push_back(f.from_rational(x));
    return BinaryForm(f, std::move(v));
  }

  /// Homogenizes a chart polynomial p(x) = F(x, 1) to the given degree.
  static BinaryForm from_chart(const Poly<Field>& p, int degree) {
    if (p.degree() > degree) throw DomainError("chart polynomial exceeds form degree");
    std::vector<Elem> a(static_cast<std::size_t>(degree) + 1, p.field().zero());
    for (int k = 0; k <= p.degree(); ++k) a[static_cast<std::size_t>(degree - k)] = p.coeff(k);
    return BinaryForm(p.field(), std::move(a));
  }

  /// The form y.
  static BinaryForm y_form(const Field& f) { return BinaryForm(f, {f.zero(), f.one()}); }

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const std::vector<Elem>& coeffs() const { return a_; }
  const Elem& coeff(int i) const { return a_[static_cast<std::size_t>(i)]; }

  /// F(x, 1), lowest degree first.
  Poly<Field> chart() const {
    std::vector<Elem> p(a_.rbegin(), a_.rend());
    return Poly<Field>(field_, std::move(p));
  }

  /// Order of vanishing at (1:0), i.e. the exponent of the largest power of y dividing F.
  int infinity_multiplicity() const {
    int e = 0;
    while (field_.is_zero(a_[static_cast<std::size_t>(e)])) ++e;
    return e;
  }

  /// F(y, x).
  BinaryForm swapped() const { return BinaryForm(field_, {a_.rbegin(), a_.rend()}); }

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<Elem> r(f.a_.size() + g.a_.size() - 1, f.field_.zero());
    for (std::size_t i = 0; i < f.a_.size(); ++i)
      for (std::size_t j = 0; j < g.a_.size(); ++j) r[i + j] = r[i + j] + f.a_[i] * g.a_[j];
    return BinaryForm(f.field_, std::move(r));
  }

  BinaryForm pow(int e) const {
    BinaryForm r(field_, {field_.one()});
    BinaryForm b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  BinaryForm scaled(const Elem& s) const {
    std::vector<Elem> r;
    for (const auto& c : a_) r.push_back(c * s);
    return BinaryForm(field_, std::move(r));
  }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.a_ == g.a_; }
  friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }

  std::string format() const {
    std::string out;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
      const Elem& c = a_[static_cast<std::size_t>(i)];
      if (field_.is_zero(c)) continue;
      std::string mono;
      const int ex = d - i, ey = i;
      if (ex > 0) mono += ex == 1 ? "x" : "x^" + std::to_string(ex);
      if (ey > 0) mono += (mono.empty() ? "" : "*") + (ey == 1 ? std::string("y") : "y^" + std::to_string(ey));
      std::string cs = field_.format(c);
      bool neg = !cs.empty() && cs[0] == '-' && field_.is_atomic(-c);
      if (neg) cs = field_.format(-c);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      const bool atomic = field_.is_atomic(neg ? -c : c);
      std::string cpart = atomic ? cs : "(" + cs + ")";
      if (mono.empty()) out += cpart;
      else if (cs == "1") out += mono;
      else out += cpart + "*" + mono;
    }
    return out;
  }

 private:
  Field field_;
  std::vector<Elem> a_;
};

/// Projective equality: f and g agree up to a nonzero scalar (cross-multiplied).
template <class Field>
bool proportional(const BinaryForm<Field>& f, const BinaryForm<Field>& g) {
  if (f.degree() != g.degree()) return false;
  const int e = f.infinity_multiplicity();
  const auto& fa = f.coeff(e);
  const auto& ga = g.coeff(e);
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) * ga != g.coeff(i) * fa) return false;
  return true;
}

/// Entries of a 2x2 matrix acting by (x, y) -> (a x + b y, c x + d y).
template <class Field>
struct Mat2 {
  using Elem = typename Field::element_type;
  Elem a, b, c, d;
  Elem det() const { return a * d - b * c; }
};

/// F_xx F_yy - F_xy^2, a form of degree 2d - 4; nullopt when it vanishes
/// identically (exactly when F is a d-th power of a linear form).
template <class Field>
std::optional<BinaryForm<Field>> hessian(const BinaryForm<Field>& F) {
  using Elem = typename Field::element_type;
  const Field& f = F.field();
  const int d = F.degree();
  if (d < 2) throw DomainError("hessian needs degree >= 2");
  auto num = [&](long v) { return f.from_rational(Rational(v)); };
  // All three second partials are forms of degree d - 2, indexed by the power of y.
  std::vector<Elem> fxx(static_cast<std::size_t>(d - 1), f.zero());
  std::vector<Elem> fyy(static_cast<std::size_t>(d - 1), f.zero());
  std::vector<Elem> fxy(static_cast<std::size_t>(d - 1), f.zero());
  for (int i = 0; i <= d; ++i) {
    const Elem& a = F.coeff(i);
    if (f.is_zero(a)) continue;
    if (i <= d - 2) fxx[static_cast<std::size_t>(i)] = a * num(long(d - i) * (d - i - 1));
    if (i >= 2) fyy[static_cast<std::size_t>(i - 2)] = a * num(long(i) * (i - 1));
    if (i >= 1 && i <= d - 1) fxy[static_cast<std::size_t>(i - 1)] = a * num(long(d - i) * i);
  }
  std::vector<Elem> h(static_cast<std::size_t>(2 * d - 3), f.zero());
  for (int i = 0; i <= d - 2; ++i) {
    for (int j = 0; j <= d - 2; ++j) {
      auto& slot = h[static_cast<std::size_t>(i + j)];
      slot = slot + fxx[static_cast<std::size_t>(i)] * fyy[static_cast<std::size_t>(j)] -
             fxy[static_cast<std::size_t>(i)] * fxy[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& c : h)
    if (!f.is_zero(c)) return BinaryForm<Field>(f, std::move(h));
  return std::nullopt;
}

/// F o M, i.e. F(a x + b y, c x + d y).
template <class Field>
BinaryForm<Field> compose(const BinaryForm<Field>& F, const Mat2<Field>& M) {
  using Elem = typename Field::element_type;
  const Field& f = F.field();
  const int d = F.degree();
  auto mul = [&](const std::vector<Elem>& p, const std::vector<Elem>& q) {
    std::vector<Elem> r(p.size() + q.size() - 1, f.zero());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
    return r;
  };
  // Powers of the two linear forms, coefficient vectors indexed by the power of y.
  std::vector<std::vector<Elem>> p1{{f.one()}}, p2{{f.one()}};
  const std::vector<Elem> l1{M.a, M.b}, l2{M.c, M.d};
  for (int k = 1; k <= d; ++k) {
    p1.push_back(mul(p1.back(), l1));
    p2.push_back(mul(p2.back(), l2));
  }
  std::vector<Elem> out(static_cast<std::size_t>(d) + 1, f.zero());
  for (int i = 0; i <= d; ++i) {
    if (f.is_zero(F.coeff(i))) continue;
    auto term = mul(p1[static_cast<std::size_t>(d - i)], p2[static_cast<std::size_t>(i)]);
    for (int k = 0; k <= d; ++k)
      out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + F.coeff(i) * term[static_cast<std::size_t>(k)];
  }
  bool any = false;
  for (const auto& c : out) any = any || !f.is_zero(c);
  if (!any) throw DomainError("composition with a rank-1 matrix collapsed the form to zero");
  return BinaryForm<Field>(f, std::move(out));
}

/// Exact quotient of forms; throws NotDivisibleError otherwise.
template <class Field>
BinaryForm<Field> form_exact_divide(const BinaryForm<Field>& A, const BinaryForm<Field>& B) {
  if (A.degree() < B.degree() || A.infinity_multiplicity() < B.infinity_multiplicity())
    throw NotDivisibleError("form not divisible: (" + A.format() + ") / (" + B.format() + ")");
  auto q = unwrap(poly_exact_divide(A.chart(), B.chart()), "form division");
  return BinaryForm<Field>::from_chart(q, A.degree() - B.degree());
}

/// True when the two forms have no common zero on the projective line.
template <class Field>
bool forms_coprime(const BinaryForm<Field>& A, const BinaryForm<Field>& B) {
  if (A.infinity_multiplicity() > 0 && B.infinity_multiplicity() > 0) return false;
  auto g = unwrap(poly_gcd(A.chart(), B.chart()), "form gcd");
  return g.degree() == 0;
}

template <class Field>
struct FormFactor {
  int multiplicity;
  BinaryForm<Field> part;  // squarefree; monic in the chart, or y itself
  bool at_infinity;
};

template <class Field>
struct FormFactorization {
  std::vector<FormFactor<Field>> factors;
  typename Field::element_type unit;
};

/// Squarefree decomposition of a form. Finite points come from Yun's
/// algorithm in the chart y = 1 (at most one part per multiplicity); the point
/// at infinity, when present, is its own part y. Sorted by multiplicity.
template <class Field>
FormFactorization<Field> factorize(const BinaryForm<Field>& F) {
  const int e = F.infinity_multiplicity();
  const Poly<Field> p = F.chart();
  FormFactorization<Field> out{{}, p.lead()};
  if (e > 0) out.factors.push_back({e, BinaryForm<Field>::y_form(F.field()), true});
  auto parts = unwrap(yun_squarefree(p), "squarefree decomposition");
  for (auto& sf : parts)
    out.factors.push_back(
        {sf.multiplicity, BinaryForm<Field>::from_chart(sf.factor, sf.factor.degree()), false});
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

template <class Field>
MultiplicityProfile profile_of(const FormFactorization<Field>& fac) {
  std::vector<int> m;
  for (const auto& f : fac.factors)
    for (int k = 0; k < f.part.degree(); ++k) m.push_back(f.multiplicity);
  return MultiplicityProfile(std::move(m));
}

template <class Field>
MultiplicityProfile profile(const BinaryForm<Field>& F) {
  return profile_of(factorize(F));
}

}  // namespace pgl2
