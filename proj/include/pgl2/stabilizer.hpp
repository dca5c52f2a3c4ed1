#pragma once

// Finite stabilizers in PGL(2) of tuples with at least three distinct points.
// A Moebius transformation is fixed by the images of three points, so the
// stabilizer is found by sending a fixed base triple of roots to every
// ordered triple of roots with matching multiplicities and keeping the
// candidates that permute the whole tuple.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "binary_form.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace pgl2 {

class MobiusTransform {
 public:
  MobiusTransform() : m_{1.0, 0.0, 0.0, 1.0} { normalize(); }
  /// z -> (a z + b) / (c z + d); stored normalized.
  MobiusTransform(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} { normalize(); }

  static MobiusTransform identity() { return {}; }

  const std::array<Complex, 4>& entries() const { return m_; }
  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  SpherePoint operator()(const SpherePoint& z) const {
    return {m_[0] * z.p + m_[1] * z.q, m_[2] * z.p + m_[3] * z.q};
  }

  friend MobiusTransform operator*(const MobiusTransform& f, const MobiusTransform& g) {
    const auto& a = f.m_;
    const auto& b = g.m_;
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  }

  MobiusTransform inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

  /// Frobenius distance between normalized representatives.
  friend double distance(const MobiusTransform& f, const MobiusTransform& g) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(f.m_[static_cast<std::size_t>(i)] - g.m_[static_cast<std::size_t>(i)]);
    return std::sqrt(s);
  }

  std::string format() const {
    std::string out = "[";
    for (int i = 0; i < 4; ++i) {
      char buf[64];
      const Complex v = m_[static_cast<std::size_t>(i)];
      std::snprintf(buf, sizeof buf, "%s%.9g%+.9gi", i ? ", " : "", v.real(), v.imag());
      out += buf;
    }
    return out + "]";
  }

 private:
  // Unit Frobenius norm; the first entry whose modulus is within 1e-9 of the
  // largest is rotated onto the positive real axis.
  void normalize() {
    double norm = 0.0, biggest = 0.0;
    for (const auto& x : m_) {
      norm += std::norm(x);
      biggest = std::max(biggest, std::abs(x));
    }
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw NumericError("degenerate Moebius matrix");
    Complex phase = 1.0;
    for (const auto& x : m_) {
      if (std::abs(x) >= biggest * (1.0 - 1e-9)) {
        phase = std::abs(x) / x;
        break;
      }
    }
    for (auto& x : m_) x *= phase / norm;
  }

  std::array<Complex, 4> m_;
};

namespace detail {
// Matrix sending (1:0), (0:1), (1:1) to the three given points.
inline std::array<Complex, 4> frame(const SpherePoint& v1, const SpherePoint& v2, const SpherePoint& v3) {
  const Complex det = v1.p * v2.q - v2.p * v1.q;
  const Complex l1 = (v3.p * v2.q - v2.p * v3.q) / det;
  const Complex l2 = (v1.p * v3.q - v3.p * v1.q) / det;
  return {l1 * v1.p, l2 * v2.p, l1 * v1.q, l2 * v2.q};
}
}  // namespace detail

/// The unique transformation with M(z_i) = w_i. Throws NumericError when two
/// points of either triple are closer than min_separation (chordal).
inline MobiusTransform mobius_through(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
                                      const SpherePoint& w1, const SpherePoint& w2, const SpherePoint& w3,
                                      double min_separation = 1e-9) {
  auto sep = [](const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
    return std::min({chordal_distance(a, b), chordal_distance(a, c), chordal_distance(b, c)});
  };
  if (sep(z1, z2, z3) <= min_separation || sep(w1, w2, w3) <= min_separation)
    throw NumericError("mobius_through: near-coincident points");
  const auto a = detail::frame(z1, z2, z3);
  const auto b = detail::frame(w1, w2, w3);
  // b * a^{-1}
  const MobiusTransform fa(a[0], a[1], a[2], a[3]);
  const MobiusTransform fb(b[0], b[1], b[2], b[3]);
  return fb * fa.inverse();
}

struct StabilizerResult {
  int order = 0;
  std::vector<MobiusTransform> elements;
  /// Smallest chordal distance between distinct roots.
  double min_separation = 0.0;
  /// Largest matching error among accepted candidates.
  double worst_accepted = 0.0;
  /// Smallest matching error among rejected candidates (a lower bound when
  /// the check stopped early); infinity when nothing was rejected.
  double best_rejected = std::numeric_limits<double>::infinity();
  bool certified = false;
};

namespace detail {

// Largest chordal distance from the image of a root to its matching root of
// the target set, or infinity when the induced map is not a bijection
// preserving multiplicities. Stops once the error passes `cutoff`.
inline double match_error(const MobiusTransform& m, const std::vector<RootPoint>& from,
                          const std::vector<RootPoint>& to, double cutoff) {
  std::vector<char> used(to.size(), 0);
  double worst = 0.0;
  for (const auto& r : from) {
    const SpherePoint img = m(r.point);
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = to.size();
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (to[j].multiplicity != r.multiplicity) continue;
      const double dist = chordal_distance(img, to[j].point);
      if (dist < best) {
        best = dist;
        arg = j;
      }
    }
    if (arg == to.size() || used[arg]) return std::numeric_limits<double>::infinity();
    used[arg] = 1;
    worst = std::max(worst, best);
    if (worst > cutoff) return worst;
  }
  return worst;
}

inline std::array<std::size_t, 3> default_base_triple(const std::vector<RootPoint>& roots) {
  // Prefer roots from the smallest multiplicity classes: fewer candidates.
  std::vector<std::size_t> idx(roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto class_size = [&](int m) {
    return std::count_if(roots.begin(), roots.end(), [m](const RootPoint& r) { return r.multiplicity == m; });
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return class_size(roots[a].multiplicity) < class_size(roots[b].multiplicity);
  });
  return {idx[0], idx[1], idx[2]};
}

inline double min_separation(const std::vector<RootPoint>& roots) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      sep = std::min(sep, chordal_distance(roots[i].point, roots[j].point));
  return sep;
}

// Every transformation sending the base triple of `from` onto an ordered
// triple of `to` and mapping `from` onto `to`, with certification data.
inline StabilizerResult enumerate_maps(const std::vector<RootPoint>& from, const std::vector<RootPoint>& to,
                                       std::array<std::size_t, 3> base, double tol, bool stop_at_first) {
  StabilizerResult res;
  res.min_separation = std::min(min_separation(from), min_separation(to));
  if (res.min_separation <= 10.0 * tol)
    throw NumericError("roots are not separated at tolerance " + std::to_string(tol));
  const double cutoff = 10.0 * tol;
  const auto& b0 = from[base[0]];
  const auto& b1 = from[base[1]];
  const auto& b2 = from[base[2]];
  const std::size_t n = to.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (to[i].multiplicity != b0.multiplicity) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || to[j].multiplicity != b1.multiplicity) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || to[k].multiplicity != b2.multiplicity) continue;
        const auto m = mobius_through(b0.point, b1.point, b2.point, to[i].point, to[j].point, to[k].point);
        const double err = match_error(m, from, to, cutoff);
        if (err <= tol) {
          res.worst_accepted = std::max(res.worst_accepted, err);
          const bool dup = std::any_of(res.elements.begin(), res.elements.end(),
                                       [&](const MobiusTransform& e) { return distance(e, m) < 1e-6; });
          if (!dup) res.elements.push_back(m);
          if (stop_at_first) {
            res.order = static_cast<int>(res.elements.size());
            res.certified = true;
            return res;
          }
        } else {
          res.best_rejected = std::min(res.best_rejected, err);
        }
      }
    }
  }
  res.order = static_cast<int>(res.elements.size());
  res.certified = res.best_rejected >= 10.0 * tol;
  return res;
}

}  // namespace detail

/// Stabilizer of a point configuration (at least three distinct points).
/// Throws NumericError("ambiguous tolerance") when some rejected candidate
/// matches within 10 * tol.
inline StabilizerResult stabilizer(const std::vector<RootPoint>& roots, double tol = 1e-9,
                                   std::optional<std::array<std::size_t, 3>> base = std::nullopt) {
  if (roots.size() < 3) throw DomainError("stabilizer: fewer than three distinct points (infinite stabilizer)");
  const auto triple = base.value_or(detail::default_base_triple(roots));
  auto res = detail::enumerate_maps(roots, roots, triple, tol, false);
  if (!res.certified)
    throw NumericError("ambiguous tolerance: a rejected candidate matches within " +
                       std::to_string(res.best_rejected) + " (tol " + std::to_string(tol) + ")");
  if (res.order == 0) throw NumericError("stabilizer search did not even accept the identity");
  return res;
}

template <class Field>
StabilizerResult stabilizer(const BinaryForm<Field>& F, double tol = 1e-9) {
  return stabilizer(complex_roots(F), tol);
}

/// A transformation M with M(roots of a) = roots of b (multiplicities preserved), if any.
inline std::optional<MobiusTransform> find_equivalence(const std::vector<RootPoint>& a,
                                                       const std::vector<RootPoint>& b, double tol = 1e-9) {
  if (a.size() != b.size() || a.size() < 3) return std::nullopt;
  auto key = [](const std::vector<RootPoint>& v) {
    std::vector<int> m;
    for (const auto& r : v) m.push_back(r.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
  };
  if (key(a) != key(b)) return std::nullopt;
  auto res = detail::enumerate_maps(a, b, detail::default_base_triple(a), tol, true);
  if (res.elements.empty()) return std::nullopt;
  return res.elements.front();
}

/// Closure of a finite set of transformations under composition and inverse.
inline bool is_closed_group(const std::vector<MobiusTransform>& g, double tol = 1e-6) {
  auto contains = [&](const MobiusTransform& m) {
    return std::any_of(g.begin(), g.end(), [&](const MobiusTransform& e) { return distance(e, m) < tol; });
  };
  for (const auto& a : g) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : g)
      if (!contains(a * b)) return false;
  }
  return contains(MobiusTransform::identity());
}

}  // namespace pgl2
