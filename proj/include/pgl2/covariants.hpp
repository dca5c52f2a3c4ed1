#pragma once

// Hessian data attached to a form: the part of the Hessian external to the
// d-tuple, and the order of vanishing at a point p of the Hessian of the
// residual tuple C_p = F / L_p^r.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "binary_form.hpp"
#include "errors.hpp"

namespace pgl2 {

template <class Field>
struct ExternalHessianProfile {
  BinaryForm<Field> external_part;
  /// (k, number of points of the Hessian with multiplicity k) outside the tuple.
  std::vector<std::pair<int, int>> parts;

  /// The multiset {k_i}, one entry per point.
  std::vector<int> multiplicities() const {
    std::vector<int> out;
    for (auto [k, n] : parts) out.insert(out.end(), static_cast<std::size_t>(n), k);
    return out;
  }
  int sum_k() const {
    int s = 0;
    for (auto [k, n] : parts) s += k * n;
    return s;
  }
  std::int64_t sum_k2() const {
    std::int64_t s = 0;
    for (auto [k, n] : parts) s += std::int64_t{k} * k * n;
    return s;
  }
};

/// E = H / prod g_j^{2j-2}. Every r-fold point of F is a (2r-2)-fold point
/// of H, and E must be coprime to F; a violation throws InconsistencyError.
template <class Field>
ExternalHessianProfile<Field> external_hessian(const BinaryForm<Field>& F,
                                               const FormFactorization<Field>& fac) {
  std::size_t distinct = 0;
  for (const auto& f : fac.factors) distinct += static_cast<std::size_t>(f.part.degree());
  if (distinct < 2) throw DomainError("hessian identically zero (a single point)");
  auto H = hessian(F);
  if (!H) throw InconsistencyError("hessian vanished for a form with two or more distinct points");
  const Field& fld = F.field();
  BinaryForm<Field> internal(fld, {fld.one()});
  for (const auto& f : fac.factors)
    if (f.multiplicity > 1) internal = internal * f.part.pow(2 * f.multiplicity - 2);
  BinaryForm<Field> E = *H;
  try {
    E = form_exact_divide(*H, internal);
  } catch (const NotDivisibleError&) {
    throw InconsistencyError("hessian is not divisible by prod g_j^(2j-2) for " + F.format());
  }
  if (!forms_coprime(E, F))
    throw InconsistencyError("external hessian part shares a zero with the form " + F.format());
  ExternalHessianProfile<Field> out{E, {}};
  for (const auto& f : factorize(E).factors) {
    auto it = std::find_if(out.parts.begin(), out.parts.end(),
                           [&](const auto& p) { return p.first == f.multiplicity; });
    if (it == out.parts.end()) out.parts.emplace_back(f.multiplicity, f.part.degree());
    else it->second += f.part.degree();
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

template <class Field>
ExternalHessianProfile<Field> external_hessian(const BinaryForm<Field>& F) {
  return external_hessian(F, factorize(F));
}

template <class Field>
struct ResidualDatum {
  int r;
  /// Squarefree factor whose roots are the points of this branch (x when at infinity,
  /// in swapped coordinates).
  Poly<Field> q;
  bool at_infinity;
  /// Order of vanishing at the point of the Hessian of the residual form.
  int hess_mult;

  int weight() const { return at_infinity ? 1 : q.degree(); }
};

namespace detail {

// Successive Taylor coefficients of a chart polynomial at the generator u of
// an extension, produced by repeated synthetic division by (x - u).
template <class Ext>
class TaylorStream {
 public:
  using Elem = typename Ext::element_type;
  TaylorStream(const Ext& ext, std::vector<Elem> coeffs) : ext_(ext), cur_(std::move(coeffs)) {}

  Elem next() {
    if (cur_.empty()) return ext_.zero();
    Elem rem = cur_.back();
    std::vector<Elem> q(cur_.size() - 1, ext_.zero());
    for (std::size_t i = cur_.size() - 1; i-- > 0;) {
      q[i] = rem;
      rem = cur_[i] + ext_.mul_generator(rem);
    }
    cur_ = std::move(q);
    return rem;
  }

 private:
  const Ext& ext_;
  std::vector<Elem> cur_;
};

template <class Field>
void residual_branch(const BinaryForm<Field>& G, const Poly<Field>& q, int r, bool at_infinity,
                     std::vector<ResidualDatum<Field>>& out) {
  using Ext = AlgebraicField<Field>;
  using Elem = typename Ext::element_type;
  const Ext ext(G.field(), q, "u");
  const Poly<Field> chart = G.chart();
  std::vector<Elem> lifted;
  lifted.reserve(chart.coeffs().size());
  for (const auto& c : chart.coeffs()) lifted.push_back(ext.from_base(c));
  TaylorStream<Ext> taylor(ext, std::move(lifted));

  // C_p(u + z) = F(u + z) / z^r: the first r Taylor coefficients must vanish.
  for (int k = 0; k < r; ++k)
    if (!ext.is_zero(taylor.next()))
      throw NotDivisibleError("residual: the point is not an " + std::to_string(r) +
                              "-fold zero of " + G.format());
  std::vector<Elem> c{taylor.next()};
  if (is_split(ext.invert(c[0])))
    throw DomainError("residual: factor mixes points of multiplicity " + std::to_string(r) +
                      " and higher");

  const int n = G.degree() - r;
  if (n < 2) throw DomainError("residual tuple has degree < 2");
  const Elem w1 = ext.from_rational(Rational(long(n) * (n - 1)));
  const Elem w2 = ext.from_rational(Rational(long(n - 1) * (n - 1)));
  auto num = [&](long v) { return ext.from_rational(Rational(v)); };

  // Coefficients of the chart Hessian n(n-1) c c'' - (n-1)^2 c'^2 of the
  // shifted residual; the translation has determinant 1 so its order at
  // z = 0 is the order of the Hessian of C_p at p.
  for (int k = 0; k <= 2 * n - 4; ++k) {
    while (static_cast<int>(c.size()) < k + 3) c.push_back(taylor.next());
    Elem a = ext.zero(), b = ext.zero();
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      if (!ext.is_zero(c[static_cast<std::size_t>(i)]) && !ext.is_zero(c[static_cast<std::size_t>(j + 2)]))
        a = a + c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j + 2)] * num(long(j + 2) * (j + 1));
      if (!ext.is_zero(c[static_cast<std::size_t>(i + 1)]) && !ext.is_zero(c[static_cast<std::size_t>(j + 1)]))
        b = b + c[static_cast<std::size_t>(i + 1)] * c[static_cast<std::size_t>(j + 1)] * num(long(i + 1) * (j + 1));
    }
    Elem s = w1 * a - w2 * b;
    if (ext.is_zero(s)) continue;
    auto inv = ext.invert(s);
    if (!is_split(inv)) {
      out.push_back({r, q, at_infinity, k});
      return;
    }
    // Zero on some points of q only: continue separately on both factors.
    auto& sp = std::get<1>(inv);
    residual_branch(G, sp.factor_a, r, at_infinity, out);
    residual_branch(G, sp.factor_b, r, at_infinity, out);
    return;
  }
  throw InconsistencyError("hessian of the residual tuple vanishes identically");
}

}  // namespace detail

/// Order of the Hessian of C_p at each point p of a class of r-fold points.
/// q is a squarefree factor (in the chart y = 1) of the multiplicity-r part,
/// or ignored when at_infinity (then y^r exactly divides F). One datum per
/// branch of the dynamic evaluation over Field[u]/(q).
template <class Field>
std::vector<ResidualDatum<Field>> residual_hessian_multiplicity(const BinaryForm<Field>& F,
                                                                const Poly<Field>& q, int r,
                                                                bool at_infinity = false) {
  std::vector<ResidualDatum<Field>> out;
  if (at_infinity) {
    if (F.infinity_multiplicity() != r)
      throw DomainError("residual: y^" + std::to_string(r) + " does not exactly divide the form");
    detail::residual_branch(F.swapped(), Poly<Field>::variable(F.field()), r, true, out);
  } else {
    if (q.degree() < 1) throw DomainError("residual: point factor must be nonconstant");
    detail::residual_branch(F, q, r, false, out);
  }
  return out;
}

/// Convenience overload taking a factor of the form's factorization.
template <class Field>
std::vector<ResidualDatum<Field>> residual_hessian_multiplicity(const BinaryForm<Field>& F,
                                                                const FormFactor<Field>& part) {
  return residual_hessian_multiplicity(F, part.part.chart(), part.multiplicity, part.at_infinity);
}

}  // namespace pgl2
