#pragma once

// Simple algebraic extensions Base[t]/(m(t)) with m monic and squarefree,
// but not necessarily irreducible. Inverting a zero divisor does not fail:
// it reports the factorization m = g * (m/g) exposed by gcd(rep, m) so the
// caller can continue on each factor separately.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace pgl2 {

/// Coprime monic factors of an extension modulus, produced by inverting a
/// zero divisor. Both are nonconstant and factor_a * factor_b is the modulus.
template <class Base>
struct SplitSignal {
  Poly<Base> factor_a;
  Poly<Base> factor_b;
};

template <class Base>
struct AlgebraicContext {
  Base base;
  Poly<Base> modulus;
  std::string name;
};

template <class Base>
class AlgebraicField;

template <class Base>
class AlgebraicNumber {
 public:
  using BaseElem = typename Base::element_type;

  AlgebraicNumber() = default;

  const std::vector<BaseElem>& coords() const { return c_; }
  const std::shared_ptr<const AlgebraicContext<Base>>& context() const { return ctx_; }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a) {
    AlgebraicNumber r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    const auto& ctx = *a.ctx_;
    const Base& base = ctx.base;
    const std::size_t n = a.c_.size();
    std::vector<BaseElem> p(2 * n - 1, base.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (base.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (base.is_zero(b.c_[j])) continue;
        p[i + j] = p[i + j] + a.c_[i] * b.c_[j];
      }
    }
    AlgebraicNumber r;
    r.ctx_ = a.ctx_;
    r.c_ = reduce(ctx, std::move(p));
    return r;
  }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

 private:
  friend class AlgebraicField<Base>;

  // Reduces a coefficient vector modulo the monic modulus to length deg(m).
  static std::vector<BaseElem> reduce(const AlgebraicContext<Base>& ctx, std::vector<BaseElem> p) {
    const auto& m = ctx.modulus.coeffs();
    const std::size_t n = m.size() - 1;
    for (std::size_t k = p.size(); k-- > n;) {
      if (ctx.base.is_zero(p[k])) continue;
      BaseElem t = p[k];
      for (std::size_t i = 0; i <= n; ++i) p[k - n + i] = p[k - n + i] - t * m[i];
    }
    p.resize(n, ctx.base.zero());
    return p;
  }

  std::shared_ptr<const AlgebraicContext<Base>> ctx_;
  std::vector<BaseElem> c_;
};

template <class Base>
class AlgebraicField {
 public:
  using element_type = AlgebraicNumber<Base>;
  using BaseElem = typename Base::element_type;
  using split_type = SplitSignal<Base>;
  static constexpr int depth = Base::depth + 1;

  /// The modulus is made monic and checked to be squarefree over the base.
  AlgebraicField(Base base, const Poly<Base>& modulus, std::string name = "t") {
    if (modulus.degree() < 1) throw DomainError("extension modulus must be nonconstant");
    Poly<Base> m = unwrap(make_monic(modulus), "extension modulus");
    Poly<Base> g = unwrap(poly_gcd(m, m.derivative()), "extension modulus");
    if (g.degree() > 0)
      throw DomainError("extension modulus " + m.format(name) + " is not squarefree");
    ctx_ = std::make_shared<const AlgebraicContext<Base>>(
        AlgebraicContext<Base>{std::move(base), std::move(m), std::move(name)});
  }

  const Base& base() const { return ctx_->base; }
  const Poly<Base>& modulus() const { return ctx_->modulus; }
  const std::string& name() const { return ctx_->name; }
  int degree() const { return ctx_->modulus.degree(); }

  element_type from_base(const BaseElem& b) const {
    element_type r = zero();
    r.c_[0] = b;
    return r;
  }
  element_type from_rational(const Rational& q) const { return from_base(base().from_rational(q)); }
  element_type zero() const {
    element_type r;
    r.ctx_ = ctx_;
    r.c_.assign(static_cast<std::size_t>(degree()), base().zero());
    return r;
  }
  element_type one() const { return from_base(base().one()); }
  element_type generator() const { return from_poly(Poly<Base>::variable(base())); }

  element_type from_poly(const Poly<Base>& p) const {
    element_type r;
    r.ctx_ = ctx_;
    r.c_ = element_type::reduce(*ctx_, p.coeffs());
    return r;
  }
  Poly<Base> to_poly(const element_type& e) const { return Poly<Base>(base(), e.c_); }

  /// e * t, by shifting coordinates and folding the top one back through the modulus.
  element_type mul_generator(const element_type& e) const {
    const std::size_t n = e.c_.size();
    element_type r;
    r.ctx_ = ctx_;
    r.c_.reserve(n);
    r.c_.push_back(base().zero());
    for (std::size_t i = 0; i + 1 < n; ++i) r.c_.push_back(e.c_[i]);
    const BaseElem& top = e.c_[n - 1];
    if (!base().is_zero(top)) {
      const auto& m = modulus().coeffs();
      for (std::size_t i = 0; i < n; ++i) r.c_[i] = r.c_[i] - top * m[i];
    }
    return r;
  }

  bool is_zero(const element_type& e) const {
    for (const auto& x : e.c_)
      if (!base().is_zero(x)) return false;
    return true;
  }

  /// Inverse, or the split of the modulus exposed by a zero divisor.
  std::variant<element_type, split_type> invert(const element_type& e) const {
    if (is_zero(e)) throw DomainError("inverse of zero");
    const Base& b = base();
    // Extended Euclid on (m, rep): keeps s with s * rep == r (mod m).
    Poly<Base> r0 = modulus(), r1 = to_poly(e);
    Poly<Base> s0(b), s1 = Poly<Base>::constant(b, b.one());
    while (!r1.is_zero()) {
      auto qr = unwrap(divrem(r0, r1), "extension base field");
      Poly<Base> s2 = s0 - qr.first * s1;
      r0 = std::move(r1);
      r1 = std::move(qr.second);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.degree() > 0) {
      Poly<Base> g = unwrap(make_monic(r0), "extension base field");
      Poly<Base> h = unwrap(poly_exact_divide(modulus(), g), "extension base field");
      return split_type{std::move(g), std::move(h)};
    }
    auto inv = unwrap(b.invert(r0.lead()), "extension base field");
    return from_poly(s0.scaled(inv));
  }

  std::string format(const element_type& e) const { return to_poly(e).format(name()); }
  bool is_atomic(const element_type& e) const {
    int nonzero = 0;
    for (const auto& x : e.c_) nonzero += base().is_zero(x) ? 0 : 1;
    if (nonzero > 1) return false;
    for (const auto& x : e.c_)
      if (!base().is_zero(x)) return base().is_atomic(x);
    return true;
  }

  /// Fields compare equal when they share a context or have the same modulus.
  friend bool operator==(const AlgebraicField& a, const AlgebraicField& b) {
    return a.ctx_ == b.ctx_ || (a.base() == b.base() && a.modulus() == b.modulus());
  }

 private:
  std::shared_ptr<const AlgebraicContext<Base>> ctx_;
};

/// Q(t) for a user-supplied modulus in t.
using NumberField = AlgebraicField<RationalField>;

}  // namespace pgl2
