#pragma once

// Floating-point views of exact data: complex embeddings of field elements,
// points of the Riemann sphere in homogeneous coordinates, and simultaneous
// polynomial root finding (Aberth-Ehrlich with Newton polishing).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "binary_form.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace pgl2 {

using Complex = std::complex<double>;

/// A point of P^1 as a homogeneous pair (p : q); q == 0 is the point at infinity.
struct SpherePoint {
  Complex p{0.0}, q{1.0};

  static SpherePoint finite(Complex z) { return {z, 1.0}; }
  static SpherePoint infinity() { return {1.0, 0.0}; }

  bool is_infinite(double eps = 0.0) const { return std::abs(q) <= eps * std::abs(p); }
  Complex value() const { return p / q; }

  std::string format() const {
    if (q == Complex(0.0)) return "inf";
    Complex z = value();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
  }
};

/// Chordal distance |z - w| / sqrt((1 + |z|^2)(1 + |w|^2)), finite at infinity.
inline double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  const double na = std::hypot(std::abs(a.p), std::abs(a.q));
  const double nb = std::hypot(std::abs(b.p), std::abs(b.q));
  return std::abs(a.p * b.q - b.p * a.q) / (na * nb);
}

template <class Field>
struct Embedding;

template <>
struct Embedding<RationalField> {
  static Embedding make(const RationalField&) { return {}; }
  Complex operator()(const Rational& q) const { return Complex(to_double(q), 0.0); }
};

namespace detail {
inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}
}  // namespace detail

struct RootFindResult {
  std::vector<Complex> roots;
  bool converged = false;
  int iterations = 0;
};

/// All complex roots of sum c[k] z^k (leading coefficient nonzero), by
/// Aberth-Ehrlich iteration from points on a circle, optionally followed by
/// Newton polishing (only meaningful for simple roots).
inline RootFindResult polynomial_roots(std::vector<Complex> c, bool polish = true, int max_iter = 2000) {
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
  RootFindResult res;
  if (c.size() <= 1) {
    res.converged = true;
    return res;
  }
  const int n = static_cast<int>(c.size()) - 1;
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) {
    res.roots = {-c[0]};
    res.converged = true;
    return res;
  }
  // Fujiwara-type bound for the initial circle.
  double radius = 0.0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0 / (n - k)));
  radius = std::max(radius, 1e-3);
  std::vector<Complex> deriv(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) deriv[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * double(k);

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);

  // A root is frozen once its backward error is at rounding level.
  auto backward_error = [&](Complex zk) {
    double scale = 0.0, az = 1.0;
    for (const auto& ck : c) {
      scale += std::abs(ck) * az;
      az *= std::abs(zk);
    }
    return std::abs(detail::horner(c, zk)) / scale;
  };
  const double eps = 8.0 * n * std::numeric_limits<double>::epsilon();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      auto& zk = z[static_cast<std::size_t>(k)];
      const Complex pv = detail::horner(c, zk);
      const Complex ratio = pv / detail::horner(deriv, zk);
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      const Complex step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) zk -= step;
      if (backward_error(zk) <= eps || std::abs(step) <= 1e-16 * (1.0 + std::abs(zk)))
        done[static_cast<std::size_t>(k)] = 1;
      else
        all = false;
    }
    res.iterations = it + 1;
    if (all) {
      res.converged = true;
      break;
    }
  }
  if (polish) {
    for (auto& zk : z) {
      for (int k = 0; k < 3; ++k) {
        const Complex d = detail::horner(deriv, zk);
        if (d == Complex(0.0)) break;
        zk -= detail::horner(c, zk) / d;
      }
    }
  }
  res.roots = std::move(z);
  return res;
}

template <class Base>
struct Embedding<AlgebraicField<Base>> {
  Embedding<Base> base;
  Complex root;

  /// Sends the generator to a fixed root of its modulus: the one of largest
  /// imaginary part, then largest real part.
  static Embedding make(const AlgebraicField<Base>& f) {
    Embedding e{Embedding<Base>::make(f.base()), Complex(0.0)};
    std::vector<Complex> c;
    for (const auto& x : f.modulus().coeffs()) c.push_back(e.base(x));
    auto roots = polynomial_roots(c).roots;
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
      if (std::abs(a.imag() - b.imag()) > 1e-12) return a.imag() > b.imag();
      return a.real() > b.real();
    });
    e.root = roots.front();
    return e;
  }

  Complex operator()(const typename AlgebraicField<Base>::element_type& x) const {
    Complex acc = 0.0;
    const auto& c = x.coords();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * root + base(*it);
    return acc;
  }
};

template <class Field>
std::vector<Complex> embed(const Poly<Field>& p, const Embedding<Field>& e) {
  std::vector<Complex> out;
  for (const auto& x : p.coeffs()) out.push_back(e(x));
  return out;
}

struct RootPoint {
  SpherePoint point;
  int multiplicity;
};

/// Points of the tuple with their exact multiplicities: the squarefree
/// decomposition is exact, each squarefree part is solved numerically and
/// polished. Throws NumericError when the relative backward error of a root
/// stays above 1e-10.
template <class Field>
std::vector<RootPoint> complex_roots(const BinaryForm<Field>& F) {
  const auto emb = Embedding<Field>::make(F.field());
  std::vector<RootPoint> out;
  for (const auto& part : factorize(F).factors) {
    if (part.at_infinity) {
      out.push_back({SpherePoint::infinity(), part.multiplicity});
      continue;
    }
    const auto c = embed(part.part.chart(), emb);
    auto found = polynomial_roots(c);
    for (const auto& z : found.roots) {
      double scale = 0.0, az = 1.0;
      for (const auto& ck : c) {
        scale += std::abs(ck) * az;
        az *= std::abs(z);
      }
      const Complex pz = detail::horner(c, z);
      const double resid = pz == Complex(0.0) ? 0.0 : std::abs(pz) / scale;
      if (!(resid < 1e-10))
        throw NumericError("root polishing failed for factor " + part.part.format() +
                           " (relative residual " + std::to_string(resid) + ")");
      out.push_back({SpherePoint::finite(z), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootPoint& a, const RootPoint& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    const bool ia = a.point.q == Complex(0.0), ib = b.point.q == Complex(0.0);
    if (ia != ib) return ia;
    if (ia) return false;
    const Complex za = a.point.value(), zb = b.point.value();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  });
  return out;
}

}  // namespace pgl2
