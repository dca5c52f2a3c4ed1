#pragma once

// Enumerative invariants of PGL(2)-orbit closures of d-tuples: dimension,
// predegree and degree, the boundary orbits and the (pre)multiplicities of
// the closure along them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "covariants.hpp"
#include "errors.hpp"
#include "profile.hpp"

namespace pgl2 {

enum class BoundaryKind { DFold, Pair };

/// The orbit of x^d, or the orbit of x^r y^(d-r) (stored with r_low <= r_high).
struct BoundaryOrbit {
  BoundaryKind kind = BoundaryKind::DFold;
  int r_low = 0;
  int r_high = 0;

  static BoundaryOrbit dfold(int d) { return {BoundaryKind::DFold, 0, d}; }
  static BoundaryOrbit pair(int r, int d) {
    if (r < 1 || r >= d) throw DomainError("pair orbit needs 1 <= r < d");
    return {BoundaryKind::Pair, std::min(r, d - r), std::max(r, d - r)};
  }

  int dimension() const { return kind == BoundaryKind::DFold ? 1 : 2; }
  bool balanced() const { return kind == BoundaryKind::Pair && r_low == r_high; }

  std::string format() const {
    if (kind == BoundaryKind::DFold) return "DFold";
    return "Pair(" + std::to_string(r_low) + "," + std::to_string(r_high) + ")";
  }

  friend bool operator==(const BoundaryOrbit&, const BoundaryOrbit&) = default;
};

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in invariant arithmetic");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in invariant arithmetic");
  return r;
}
}  // namespace detail

inline int orbit_dimension(const MultiplicityProfile& P) {
  if (P.s() == 0) throw DomainError("empty profile");
  return P.s() >= 3 ? 3 : P.s();
}

/// d^3 - 3 d p2 + 2 p3; zero when s <= 2.
inline std::int64_t predegree(const MultiplicityProfile& P) {
  using detail::checked_add;
  using detail::checked_mul;
  const std::int64_t d = P.d();
  const std::int64_t v = checked_add(checked_add(checked_mul(checked_mul(d, d), d), -checked_mul(3 * d, P.p2())),
                                     checked_mul(2, P.p3()));
  return v;
}

/// Degree of the rational normal curve (s = 1) or of the surface x^r y^(d-r) (s = 2).
inline std::int64_t curve_or_surface_degree(const MultiplicityProfile& P) {
  if (P.s() == 1) return P.d();
  if (P.s() != 2) throw DomainError("curve/surface degree needs s <= 2 (profile " + P.format() + ")");
  const std::int64_t r = P.multiplicities()[1], d = P.d();
  return 2 * r == d ? r * r : 2 * r * (d - r);
}

inline std::vector<BoundaryOrbit> boundary(const MultiplicityProfile& P) {
  const int d = P.d();
  if (P.s() == 1) return {};
  std::vector<BoundaryOrbit> out{BoundaryOrbit::dfold(d)};
  if (P.s() == 2) return out;
  for (int r : P.multiplicities()) {
    const auto o = BoundaryOrbit::pair(r, d);
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  }
  std::sort(out.begin() + 1, out.end(), [](const auto& a, const auto& b) { return a.r_low < b.r_low; });
  return out;
}

/// Multiplicity of the surface orbit closure of x^r y^(d-r) along the orbit of x^d.
inline int surface_multiplicity_dfold(const MultiplicityProfile& P) {
  if (P.s() != 2) throw DomainError("surface multiplicity needs s = 2");
  return 2 * P.multiplicities()[1] == P.d() ? 1 : 2;
}

template <class Field>
std::int64_t premultiplicity_dfold(const ExternalHessianProfile<Field>& E, int s) {
  return E.sum_k2() + 4 * s - 8;
}

template <class Field>
std::int64_t premultiplicity_dfold(const BinaryForm<Field>& F) {
  const auto fac = factorize(F);
  const auto P = profile_of(fac);
  if (P.s() < 3) throw DomainError("DFold premultiplicity needs s >= 3; use the surface/curve path");
  return premultiplicity_dfold(external_hessian(F, fac), P.s());
}

/// h for every point class of multiplicity r, one datum per dynamic-evaluation branch.
template <class Field>
std::vector<ResidualDatum<Field>> residual_data(const BinaryForm<Field>& F, const FormFactorization<Field>& fac,
                                                int r) {
  std::vector<ResidualDatum<Field>> out;
  for (const auto& part : fac.factors) {
    if (part.multiplicity != r) continue;
    auto data = residual_hessian_multiplicity(F, part);
    out.insert(out.end(), data.begin(), data.end());
  }
  return out;
}

/// Pair premultiplicity from residual data of all point classes of F.
template <class Field>
std::int64_t premultiplicity_pair(const std::vector<ResidualDatum<Field>>& data, const BoundaryOrbit& O, int d) {
  if (O.kind != BoundaryKind::Pair) throw DomainError("not a pair orbit");
  std::int64_t total = 0;
  bool seen = false;
  for (const auto& x : data) {
    if (x.r != O.r_low && x.r != O.r_high) continue;
    seen = true;
    const std::int64_t per = 2 * x.r == d ? 4 + 2 * std::int64_t{x.hess_mult} : 2 + std::int64_t{x.hess_mult};
    total += per * x.weight();
  }
  if (!seen) throw DomainError(O.format() + " is not a boundary orbit of this form");
  return total;
}

template <class Field>
std::int64_t premultiplicity_pair(const BinaryForm<Field>& F, const BoundaryOrbit& O) {
  const auto fac = factorize(F);
  const auto P = profile_of(fac);
  if (P.s() < 3) throw DomainError("pair premultiplicity needs s >= 3");
  const auto orbits = boundary(P);
  if (O.kind != BoundaryKind::Pair || std::find(orbits.begin(), orbits.end(), O) == orbits.end())
    throw DomainError(O.format() + " is not a boundary orbit of " + F.format());
  auto data = residual_data(F, fac, O.r_low);
  if (O.r_high != O.r_low) {
    auto more = residual_data(F, fac, O.r_high);
    data.insert(data.end(), more.begin(), more.end());
  }
  return premultiplicity_pair(data, O, P.d());
}

struct BoundaryEntry {
  BoundaryOrbit orbit;
  std::optional<std::int64_t> premultiplicity;
  std::optional<std::int64_t> multiplicity;

  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

/// One branch of the residual computation, in field-independent form.
struct ResidualSummary {
  int r;
  int weight;
  int hess_mult;
  bool at_infinity;
  std::string factor;

  friend bool operator==(const ResidualSummary&, const ResidualSummary&) = default;
};

struct OrbitReport {
  MultiplicityProfile profile;
  int dimension = 0;
  std::int64_t predegree = 0;
  /// nullopt: infinite stabilizer (s <= 2) or not computed.
  std::optional<std::int64_t> stabilizer_order;
  bool stabilizer_certified = false;
  std::optional<std::int64_t> degree;
  std::vector<BoundaryEntry> boundary;
  std::optional<bool> smooth;
  std::optional<bool> smooth_codim1;
  std::vector<std::pair<int, int>> external_profile;
  std::vector<ResidualSummary> residuals;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;

  const BoundaryEntry* find(const BoundaryOrbit& o) const {
    for (const auto& e : boundary)
      if (e.orbit == o) return &e;
    return nullptr;
  }
};

struct StabilizerInput {
  /// nullopt: skip everything that needs the stabilizer order.
  std::optional<std::int64_t> order;
  bool certified = false;
};

/// Exact invariants of F. Multiplicities, degree and smoothness need the
/// stabilizer order when s >= 3; every division by it must be exact.
template <class Field>
OrbitReport assemble_report(const BinaryForm<Field>& F, StabilizerInput stab) {
  const auto fac = factorize(F);
  OrbitReport rep;
  rep.profile = profile_of(fac);
  const auto& P = rep.profile;
  rep.dimension = orbit_dimension(P);
  rep.predegree = predegree(P);

  if (P.s() <= 2) {
    rep.degree = curve_or_surface_degree(P);
    if (P.s() == 2) {
      const int m = surface_multiplicity_dfold(P);
      rep.boundary.push_back({BoundaryOrbit::dfold(P.d()), std::nullopt, m});
      rep.smooth = m == 1;
      rep.external_profile = external_hessian(F, fac).parts;
    } else {
      rep.smooth = true;
    }
    rep.smooth_codim1 = rep.smooth;
    return rep;
  }

  const auto E = external_hessian(F, fac);
  rep.external_profile = E.parts;
  std::vector<ResidualDatum<Field>> data;
  for (const auto& part : fac.factors) {
    auto more = residual_hessian_multiplicity(F, part);
    data.insert(data.end(), more.begin(), more.end());
  }
  for (const auto& x : data)
    rep.residuals.push_back({x.r, x.weight(), x.hess_mult, x.at_infinity,
                             x.at_infinity ? std::string("y") : x.q.format("x")});

  for (const auto& o : boundary(P)) {
    const std::int64_t pre = o.kind == BoundaryKind::DFold ? premultiplicity_dfold(E, P.s())
                                                           : premultiplicity_pair(data, o, P.d());
    rep.boundary.push_back({o, pre, std::nullopt});
  }

  if (!stab.order) return rep;
  const std::int64_t g = *stab.order;
  if (g < 1) throw DomainError("stabilizer order must be positive");
  rep.stabilizer_order = g;
  rep.stabilizer_certified = stab.certified;
  auto divide = [&](std::int64_t v, const std::string& what) {
    if (v % g != 0)
      throw InconsistencyError("stabilizer order " + std::to_string(g) + " does not divide the " + what + " " +
                               std::to_string(v) + " of " + F.format());
    return v / g;
  };
  rep.degree = divide(rep.predegree, "predegree");
  bool all_one = true, pairs_one = true;
  for (auto& e : rep.boundary) {
    e.multiplicity = divide(*e.premultiplicity, e.orbit.format() + " premultiplicity");
    all_one = all_one && *e.multiplicity == 1;
    if (e.orbit.kind == BoundaryKind::Pair) pairs_one = pairs_one && *e.multiplicity == 1;
  }
  rep.smooth = all_one;
  rep.smooth_codim1 = pairs_one;
  return rep;
}

}  // namespace pgl2
