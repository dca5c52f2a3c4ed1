#pragma once

// Independent checks: the predegree as a count over ordered triples of
// points, the surface degree as a count over ordered pairs, and a
// floating-point recomputation of the Hessian compared with the exact
// (2r-2)-fold / external split.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "binary_form.hpp"
#include "covariants.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "profile.hpp"

namespace pgl2 {

/// Sum of m_i m_j m_k over ordered triples of pairwise distinct indices.
inline std::int64_t oracle_predegree(const MultiplicityProfile& P) {
  const auto& m = P.multiplicities();
  const std::size_t s = m.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < s; ++k) {
        if (k == i || k == j) continue;
        total += std::int64_t{m[i]} * m[j] * m[k];
      }
    }
  return total;
}

struct PairCount {
  std::int64_t ordered_pairs;
  int covering_degree;
  std::int64_t degree;
};

/// Sum of m_i m_j over ordered pairs, and the surface degree obtained by
/// dividing by the degree of the covering (2 when both points have
/// multiplicity d/2, else 1).
inline PairCount oracle_pair_count(const MultiplicityProfile& P) {
  if (P.s() != 2) throw DomainError("pair count needs exactly two distinct points");
  const auto& m = P.multiplicities();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (i != j) total += std::int64_t{m[i]} * m[j];
  const int cover = m[0] == m[1] ? 2 : 1;
  return {total, cover, total / cover};
}

enum class CheckOutcome { Pass, Fail, Inconclusive };

inline const char* outcome_name(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct HessianCheck {
  CheckOutcome outcome = CheckOutcome::Inconclusive;
  std::string detail;
  /// Largest scaled Taylor coefficient that should vanish.
  double worst_vanishing = 0.0;
  /// Smallest scaled Taylor coefficient that should not.
  double weakest_leading = 0.0;
};

namespace detail {

// Hessian coefficients (indexed by the power of y) in complex arithmetic,
// plus the sum of absolute values of all contributing products.
inline std::pair<std::vector<Complex>, double> numeric_hessian(const std::vector<Complex>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<Complex> fxx(static_cast<std::size_t>(d - 1)), fyy(fxx.size()), fxy(fxx.size());
  for (int i = 0; i <= d; ++i) {
    const Complex c = a[static_cast<std::size_t>(i)];
    if (i <= d - 2) fxx[static_cast<std::size_t>(i)] = c * double(d - i) * double(d - i - 1);
    if (i >= 2) fyy[static_cast<std::size_t>(i - 2)] = c * double(i) * double(i - 1);
    if (i >= 1 && i <= d - 1) fxy[static_cast<std::size_t>(i - 1)] = c * double(d - i) * double(i);
  }
  std::vector<Complex> h(static_cast<std::size_t>(2 * d - 3));
  double scale = 0.0;
  for (std::size_t i = 0; i < fxx.size(); ++i)
    for (std::size_t j = 0; j < fxx.size(); ++j) {
      const Complex p = fxx[i] * fyy[j], q = fxy[i] * fxy[j];
      h[i + j] += p - q;
      scale += std::abs(p) + std::abs(q);
    }
  return {h, scale};
}

// Relative size below which a value computed from n coefficients is
// indistinguishable from rounding noise.
inline double rounding_floor(std::size_t n) {
  return 1e3 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

inline std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// i-th Taylor coefficient at the point of a form given by coefficients
// indexed by the power of y, divided by the same sum with absolute values.
inline double scaled_taylor(const std::vector<Complex>& h, const SpherePoint& p, int i) {
  // Work in the chart where the point is finite and of modulus <= 1.
  const bool swap = std::abs(p.p) > std::abs(p.q);
  const Complex z = swap ? p.q / p.p : p.p / p.q;
  // chart polynomial in the local coordinate: swap -> F(1, w), else F(w, 1)
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<Complex> c(h.size());
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(swap ? k : n - k)] = h[static_cast<std::size_t>(k)];
  Complex val = 0.0;
  double mag = 0.0;
  for (int k = i; k <= n; ++k) {
    double binom = 1.0;
    for (int t = 0; t < i; ++t) binom = binom * double(k - t) / double(t + 1);
    const Complex term = c[static_cast<std::size_t>(k)] * binom * std::pow(z, k - i);
    val += term;
    mag += std::abs(term);
  }
  return mag == 0.0 ? 0.0 : std::abs(val) / mag;
}

// Zeros of the form h inside the chart circle |w - z| = radius around the
// point (in the chart where it has modulus <= 1), by the argument principle.
// nullopt when the form gets within the rounding floor of zero (relative)
// on the circle.
inline std::optional<int> winding_count(const std::vector<Complex>& h, const SpherePoint& p, double radius,
                                        double floor) {
  const bool swap = std::abs(p.p) > std::abs(p.q);
  const Complex z = swap ? p.q / p.p : p.p / p.q;
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<Complex> c(h.size());
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(swap ? k : n - k)] = h[static_cast<std::size_t>(k)];
  auto eval = [&](double theta, bool& small) {
    const Complex w = z + std::polar(radius, theta);
    Complex v = 0.0;
    double mag = 0.0, aw = 1.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * w + *it;
    for (const auto& ck : c) {
      mag += std::abs(ck) * aw;
      aw *= std::abs(w);
    }
    small = small || std::abs(v) <= floor * mag;
    return v;
  };
  for (int samples = 256; samples <= (1 << 16); samples *= 2) {
    bool small = false, coarse = false;
    double total = 0.0;
    Complex prev = eval(0.0, small);
    for (int k = 1; k <= samples; ++k) {
      const Complex cur = eval(2.0 * std::numbers::pi * k / samples, small);
      const double step = std::arg(cur / prev);
      if (std::abs(step) > std::numbers::pi / 4) coarse = true;
      total += step;
      prev = cur;
    }
    if (small) return std::nullopt;
    if (!coarse) return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  }
  return std::nullopt;
}

}  // namespace detail

/// Recomputes the Hessian in floating point from the embedded coefficients
/// and compares it with the exact data: every r-fold point of F must be a
/// (2r-2)-fold zero, every external zero of multiplicity k a k-fold zero,
/// with nothing else. Two tests are made: Taylor coefficients at the
/// predicted points (vanishing up to order mu - 1 within tol), and the
/// number of numeric zeros in a small disk around each predicted point,
/// which must be mu. Inconclusive when rounding noise hides the count.
template <class Field>
HessianCheck numeric_hessian_check(const BinaryForm<Field>& F, double tol = 1e-8) {
  HessianCheck out;
  const auto emb = Embedding<Field>::make(F.field());
  std::vector<Complex> a;
  for (const auto& c : F.coeffs()) a.push_back(emb(c));
  if (F.degree() < 2) throw DomainError("hessian needs degree >= 2");
  const auto [h, scale] = detail::numeric_hessian(a);
  double hmax = 0.0;
  for (const auto& c : h) hmax = std::max(hmax, std::abs(c));

  const auto fac = factorize(F);
  if (profile_of(fac).s() == 1) {
    out.worst_vanishing = hmax / scale;
    out.outcome = hmax <= tol * scale ? CheckOutcome::Pass : CheckOutcome::Fail;
    out.detail = "single point: numeric hessian relative size " + std::to_string(hmax / scale);
    return out;
  }
  if (hmax <= tol * scale) {
    out.outcome = CheckOutcome::Fail;
    out.detail = "numeric hessian vanishes but the form has two or more distinct points";
    return out;
  }

  // Predicted zeros of the Hessian with their orders.
  std::vector<RootPoint> predicted;
  for (const auto& r : complex_roots(F))
    if (r.multiplicity > 1) predicted.push_back({r.point, 2 * r.multiplicity - 2});
  const auto E = external_hessian(F, fac);
  if (E.external_part.degree() > 0)
    for (const auto& r : complex_roots(E.external_part)) predicted.push_back(r);
  int expected_total = 0;
  for (const auto& p : predicted) expected_total += p.multiplicity;
  if (expected_total != static_cast<int>(h.size()) - 1) {
    out.outcome = CheckOutcome::Fail;
    out.detail = "predicted zero count " + std::to_string(expected_total) + " differs from hessian degree";
    return out;
  }

  // Taylor test. A leading coefficient lost in rounding noise is left to
  // the cluster test.
  const double floor = detail::rounding_floor(h.size());
  out.weakest_leading = 1.0;
  for (const auto& p : predicted) {
    for (int i = 0; i < p.multiplicity; ++i)
      out.worst_vanishing = std::max(out.worst_vanishing, detail::scaled_taylor(h, p.point, i));
    out.weakest_leading = std::min(out.weakest_leading, detail::scaled_taylor(h, p.point, p.multiplicity));
  }
  if (out.worst_vanishing > tol) {
    out.outcome = CheckOutcome::Fail;
    out.detail = "taylor test: vanishing " + detail::format_sci(out.worst_vanishing) + " above tolerance";
    return out;
  }

  // Cluster test: zeros of the numeric Hessian counted by the argument
  // principle in disjoint disks around the predicted zeros.
  double sep = 2.0;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    for (std::size_t j = i + 1; j < predicted.size(); ++j)
      sep = std::min(sep, chordal_distance(predicted[i].point, predicted[j].point));
  const double radius = 0.25 * sep;
  for (const auto& p : predicted) {
    const auto count = detail::winding_count(h, p.point, radius, floor);
    if (!count) {
      out.outcome = CheckOutcome::Inconclusive;
      out.detail = "numeric hessian nearly vanishes on the circle around " + p.point.format();
      return out;
    }
    if (*count != p.multiplicity) {
      out.outcome = CheckOutcome::Fail;
      out.detail = "disk around " + p.point.format() + " holds " + std::to_string(*count) +
                   " numeric zeros, expected " + std::to_string(p.multiplicity);
      return out;
    }
  }
  out.outcome = CheckOutcome::Pass;
  out.detail = std::to_string(predicted.size()) + " predicted zeros confirmed";
  return out;
}

}  // namespace pgl2
