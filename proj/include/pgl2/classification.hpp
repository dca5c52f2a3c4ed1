#pragma once

// Finite subgroups of PGL(2), their special orbits and the composite forms
// A^a B^b C^c supported on them; smoothness of orbit closures; the tabulated
// A/B/C-multiplicity conditions, checked against the exact pipeline.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "binary_form.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "rational.hpp"
#include "stabilizer.hpp"

namespace pgl2 {

enum class GroupKind { Cn, Dn, A4, S4, A5 };

struct GroupId {
  GroupKind kind;
  int n = 0;  // Cn, Dn only

  static GroupId cyclic(int n) {
    if (n < 1) throw DomainError("C_n needs n >= 1");
    return {GroupKind::Cn, n};
  }
  static GroupId dihedral(int n) {
    if (n < 2) throw DomainError("D_n needs n >= 2");
    return {GroupKind::Dn, n};
  }
  static GroupId tetrahedral() { return {GroupKind::A4, 0}; }
  static GroupId octahedral() { return {GroupKind::S4, 0}; }
  static GroupId icosahedral() { return {GroupKind::A5, 0}; }

  int order() const {
    switch (kind) {
      case GroupKind::Cn: return n;
      case GroupKind::Dn: return 2 * n;
      case GroupKind::A4: return 12;
      case GroupKind::S4: return 24;
      case GroupKind::A5: return 60;
    }
    return 0;
  }

  /// Degrees of the special orbits A, B, C (two orbits of length 1 for C_n).
  std::vector<int> orbit_degrees() const {
    switch (kind) {
      case GroupKind::Cn: return {1, 1};
      case GroupKind::Dn: return {2, n, n};
      case GroupKind::A4: return {4, 4, 6};
      case GroupKind::S4: return {6, 8, 12};
      case GroupKind::A5: return {12, 20, 30};
    }
    return {};
  }

  std::string name() const {
    switch (kind) {
      case GroupKind::Cn: return "C" + std::to_string(n);
      case GroupKind::Dn: return "D" + std::to_string(n);
      case GroupKind::A4: return "A4";
      case GroupKind::S4: return "S4";
      case GroupKind::A5: return "A5";
    }
    return "?";
  }

  /// "D5", "Dn" with n, "A4", "S4", "A5", "C3".
  static GroupId parse(const std::string& text, std::optional<int> n = std::nullopt) {
    if (text == "A4") return tetrahedral();
    if (text == "S4") return octahedral();
    if (text == "A5") return icosahedral();
    if (!text.empty() && (text[0] == 'D' || text[0] == 'C')) {
      int k = 0;
      if (text.size() == 1 || text.substr(1) == "n") {
        if (!n) throw ParseError("group " + text + " needs --n");
        k = *n;
      } else {
        try {
          std::size_t used = 0;
          k = std::stoi(text.substr(1), &used);
          if (used != text.size() - 1) throw ParseError("bad group name " + text);
        } catch (const std::logic_error&) {
          throw ParseError("bad group name " + text);
        }
      }
      return text[0] == 'D' ? dihedral(k) : cyclic(k);
    }
    throw ParseError("unknown group " + text + " (expected Cn, Dn, A4, S4, A5)");
  }

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

enum class SpecialOrbit { A = 0, B = 1, C = 2 };

inline char orbit_letter(SpecialOrbit w) { return "ABC"[static_cast<int>(w)]; }

/// sqrt(-3) when the field is presented as Q(t)/(t^2+3), else nullopt.
inline std::optional<Rational> sqrt_minus_three(const RationalField&) { return std::nullopt; }

template <class Base>
std::optional<typename AlgebraicField<Base>::element_type> sqrt_minus_three(const AlgebraicField<Base>& f) {
  const Base& b = f.base();
  const Poly<Base> want(b, {b.from_rational(3), b.zero(), b.one()});
  if (f.modulus() == want) return f.generator();
  return std::nullopt;
}

/// The listed special-orbit form of the group.
template <class Field>
BinaryForm<Field> special_form(const Field& field, const GroupId& g, SpecialOrbit which) {
  using Elem = typename Field::element_type;
  auto q = [&](long v) { return field.from_rational(Rational(v)); };
  auto sparse = [&](int d, std::vector<std::pair<int, long>> terms) {
    // terms: (power of y, coefficient)
    std::vector<Elem> a(static_cast<std::size_t>(d) + 1, field.zero());
    for (auto [i, c] : terms) a[static_cast<std::size_t>(i)] = q(c);
    return BinaryForm<Field>(field, std::move(a));
  };
  const int w = static_cast<int>(which);
  switch (g.kind) {
    case GroupKind::Cn:
      if (which == SpecialOrbit::C) throw DomainError("C_n has only two special orbits");
      return which == SpecialOrbit::A ? sparse(1, {{0, 1}}) : sparse(1, {{1, 1}});
    case GroupKind::Dn: {
      const int n = g.n;
      if (w == 0) return sparse(2, {{1, 1}});
      return sparse(n, {{0, 1}, {n, w == 1 ? 1 : -1}});
    }
    case GroupKind::A4: {
      if (w == 2) return sparse(6, {{1, 1}, {5, -1}});
      const auto s = sqrt_minus_three(field);
      if (!s) throw FieldError("the A4 forms need sqrt(-3): pass --minpoly \"t^2+3\"");
      std::vector<Elem> a(5, field.zero());
      a[0] = field.one();
      a[4] = field.one();
      a[2] = *s * q(w == 0 ? 2 : -2);
      return BinaryForm<Field>(field, std::move(a));
    }
    case GroupKind::S4:
      if (w == 0) return sparse(6, {{1, 1}, {5, -1}});
      if (w == 1) return sparse(8, {{0, 1}, {4, 14}, {8, 1}});
      return sparse(12, {{0, 1}, {4, -33}, {8, -33}, {12, 1}});
    case GroupKind::A5:
      if (w == 0) return sparse(12, {{1, 1}, {6, 11}, {11, -1}});
      if (w == 1) return sparse(20, {{0, 1}, {5, -228}, {10, 494}, {15, 228}, {20, 1}});
      return sparse(30, {{0, 1}, {5, 522}, {10, -10005}, {20, -10005}, {25, -522}, {30, 1}});
  }
  throw DomainError("unknown group");
}

/// A^a B^b C^c; exponents must not all vanish.
template <class Field>
BinaryForm<Field> composite(const Field& field, const GroupId& g, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("exponents must be non-negative");
  if (a + b + c == 0) throw DomainError("exponents must not all vanish");
  BinaryForm<Field> out(field, {field.one()});
  const std::array<int, 3> e{a, b, c};
  for (int k = 0; k < 3; ++k)
    if (e[static_cast<std::size_t>(k)] > 0)
      out = out * special_form(field, g, static_cast<SpecialOrbit>(k)).pow(e[static_cast<std::size_t>(k)]);
  return out;
}

/// F = unit * g^m with m the gcd of the multiplicities (g returned without the unit).
template <class Field>
std::pair<BinaryForm<Field>, int> reduce_by_gcd(const BinaryForm<Field>& F) {
  const auto fac = factorize(F);
  int m = 0;
  for (const auto& f : fac.factors) m = std::gcd(m, f.multiplicity);
  BinaryForm<Field> g(F.field(), {F.field().one()});
  for (const auto& f : fac.factors) g = g * f.part.pow(f.multiplicity / m);
  return {g, m};
}

/// Smoothness of the orbit closure. For s >= 3 the stabilizer order is needed.
template <class Field>
bool is_smooth(const BinaryForm<Field>& F, StabilizerInput stab) {
  const auto g = reduce_by_gcd(F).first;
  const auto rep = assemble_report(g, stab);
  if (!rep.smooth) throw DomainError("smoothness needs the stabilizer order");
  return *rep.smooth;
}

template <class Field>
bool is_smooth_codim1(const BinaryForm<Field>& F, StabilizerInput stab) {
  const auto g = reduce_by_gcd(F).first;
  const auto rep = assemble_report(g, stab);
  if (!rep.smooth_codim1) throw DomainError("smoothness needs the stabilizer order");
  return *rep.smooth_codim1;
}

struct AbcValue {
  /// nullopt: exponent zero, not applicable.
  std::optional<int> value;
  /// The tabulated conditions only say "not 1"; the true value is >= value.
  bool lower_bound = false;

  std::string format() const {
    if (!value) return "N/A";
    return (lower_bound ? ">=" : "") + std::to_string(*value);
  }
  friend bool operator==(const AbcValue&, const AbcValue&) = default;
};

struct AbcMultiplicities {
  std::array<AbcValue, 3> mult;
  std::vector<std::string> warnings;
  /// C-multiplicity with respect to the larger stabilizer when it grows (A4, a = b).
  std::optional<int> effective_c;
};

namespace detail {

inline bool proportional_triple(const Integer& a, const Integer& b, const Integer& c, long x, long y, long z) {
  // (a,b,c) = lambda (x,y,z) with lambda > 0
  if (a * y != b * x || a * z != c * x || b * z != c * y) return false;
  return sgn(a) > 0 || sgn(b) > 0 || sgn(c) > 0;
}

}  // namespace detail

/// The tabulated A/B/C-multiplicities of A^a B^b C^c.
inline AbcMultiplicities abc_multiplicities(const GroupId& g, const Integer& a, const Integer& b, const Integer& c) {
  if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0) throw DomainError("exponents must be non-negative");
  if (g.kind == GroupKind::Cn) throw DomainError("cyclic groups have no three special orbits");
  const auto deg = g.orbit_degrees();
  Integer s = 0;
  const std::array<const Integer*, 3> e{&a, &b, &c};
  for (int k = 0; k < 3; ++k)
    if (sgn(*e[static_cast<std::size_t>(k)]) > 0) s += deg[static_cast<std::size_t>(k)];
  if (s < 3) throw DomainError("degenerate support: the composite has fewer than three distinct points");

  AbcMultiplicities out;
  auto set = [&](int k, int value, bool lower = false) {
    if (sgn(*e[static_cast<std::size_t>(k)]) > 0) out.mult[static_cast<std::size_t>(k)] = {value, lower};
  };
  auto one_or = [](const Integer& cond, int otherwise) { return sgn(cond) != 0 ? 1 : otherwise; };

  switch (g.kind) {
    case GroupKind::Dn: {
      const Integer n = g.n;
      set(0, b != c ? 1 : 2, b == c);
      const Integer cb = -6 * a + (n - 1) * (n - 2) * b + 3 * n * (n - 1) * c;
      const Integer cc = -6 * a + 3 * n * (n - 1) * b + (n - 1) * (n - 2) * c;
      set(1, one_or(cb, 2), sgn(cb) == 0);
      set(2, one_or(cc, 2), sgn(cc) == 0);
      break;
    }
    case GroupKind::A4: {
      set(0, one_or(a - 8 * b + 20 * c, 2));
      set(1, one_or(8 * a - b - 20 * c, 2));
      int cm = a != b ? 1 : (c == 14 * a && c == 14 * b ? 4 : 2);
      set(2, cm);
      if (a == b) {
        out.warnings.push_back("when a=b the stabilizer is S_4 (order 24, not 12)");
        if (sgn(c) > 0) out.effective_c = cm / 2;
      }
      break;
    }
    case GroupKind::S4: {
      set(0, one_or(a - 14 * b + 33 * c, 2));
      set(1, one_or(20 * a - 7 * b - 88 * c, 2));
      int cm = one_or(45 * a - 84 * b - 11 * c, 2);
      if (detail::proportional_triple(a, b, c, 5852, 561, 19656)) cm = 3;
      set(2, cm);
      break;
    }
    case GroupKind::A5: {
      set(0, one_or(11 * a - 228 * b + 522 * c, 2));
      set(1, one_or(88 * a - 57 * b - 580 * c, 2));
      int cm = one_or(99 * a - 285 * b - 58 * c, 2);
      if (detail::proportional_triple(a, b, c, 26864005, 431607, 43733250)) cm = 3;
      set(2, cm);
      break;
    }
    case GroupKind::Cn: break;
  }
  return out;
}

inline AbcMultiplicities abc_multiplicities(const GroupId& g, long a, long b, long c) {
  return abc_multiplicities(g, Integer(a), Integer(b), Integer(c));
}

/// Pipeline check of the tabulated values: for every exponent e occurring,
/// Pair(e, d-e) premultiplicity / |G| against the sum of the tabulated values
/// of the orbits carrying exponent e.
struct AbcCheck {
  int exponent;
  std::string orbits;
  std::int64_t pipeline;
  int tabulated;
  bool lower_bound;
  bool agrees;
};

template <class Field>
std::vector<AbcCheck> abc_pipeline_check(const BinaryForm<Field>& F, const GroupId& g,
                                         const std::array<int, 3>& e, const AbcMultiplicities& tab) {
  const auto fac = factorize(F);
  const auto P = profile_of(fac);
  std::vector<AbcCheck> out;
  std::vector<int> done;
  for (int k = 0; k < 3; ++k) {
    const int ex = e[static_cast<std::size_t>(k)];
    if (ex == 0 || std::find(done.begin(), done.end(), ex) != done.end()) continue;
    done.push_back(ex);
    AbcCheck chk{ex, "", 0, 0, false, false};
    for (int j = 0; j < 3; ++j) {
      if (e[static_cast<std::size_t>(j)] != ex) continue;
      chk.orbits += orbit_letter(static_cast<SpecialOrbit>(j));
      const auto& v = tab.mult[static_cast<std::size_t>(j)];
      chk.tabulated += *v.value;
      chk.lower_bound = chk.lower_bound || v.lower_bound;
    }
    const std::int64_t pre = premultiplicity_pair(F, BoundaryOrbit::pair(ex, P.d()));
    if (pre % g.order() != 0)
      throw InconsistencyError("|G| = " + std::to_string(g.order()) + " does not divide the Pair premultiplicity " +
                               std::to_string(pre) + " of " + F.format());
    chk.pipeline = pre / g.order();
    chk.agrees = chk.lower_bound ? chk.pipeline >= chk.tabulated : chk.pipeline == chk.tabulated;
    out.push_back(chk);
  }
  return out;
}

struct CatalogRow {
  GroupId group;
  std::array<int, 3> exponents;
  std::string form;
  int degree;
  MultiplicityProfile profile;
  bool reduced;
  OrbitReport report;
};

/// Every composite of every non-cyclic group (D_n for 2 <= n <= n_max) with
/// exponents in [0, exponent_bound], degree at most d_max and at least three
/// distinct points. A4 composites live over `a4_field`, the rest over Q.
/// The stabilizer is computed numerically for each composite.
template <class Visitor>
void for_each_composite(int d_max, int exponent_bound, int n_max, Visitor&& visit) {
  std::vector<GroupId> groups;
  for (int n = 2; n <= n_max; ++n) groups.push_back(GroupId::dihedral(n));
  groups.push_back(GroupId::tetrahedral());
  groups.push_back(GroupId::octahedral());
  groups.push_back(GroupId::icosahedral());
  for (const auto& g : groups) {
    const auto deg = g.orbit_degrees();
    for (int a = 0; a <= exponent_bound; ++a)
      for (int b = 0; b <= exponent_bound; ++b)
        for (int c = 0; c <= exponent_bound; ++c) {
          const int d = a * deg[0] + b * deg[1] + c * deg[2];
          const int s = (a ? deg[0] : 0) + (b ? deg[1] : 0) + (c ? deg[2] : 0);
          if (d == 0 || d > d_max || s < 3) continue;
          visit(g, std::array<int, 3>{a, b, c});
        }
  }
}

inline NumberField sqrt_minus_three_field() {
  const RationalField QQ;
  return NumberField(QQ, Poly<RationalField>(QQ, {Rational(3), Rational(0), Rational(1)}), "t");
}

template <class Field>
CatalogRow catalog_row(const Field& field, const GroupId& g, const std::array<int, 3>& e, double tol = 1e-9) {
  const auto F = composite(field, g, e[0], e[1], e[2]);
  const auto st = stabilizer(F, tol);
  CatalogRow row{g, e, F.format(), F.degree(), profile(F), std::gcd(std::gcd(e[0], e[1]), e[2]) == 1, {}};
  row.report = assemble_report(F, {st.order, st.certified});
  return row;
}

/// Rows for the whole catalog sweep.
inline std::vector<CatalogRow> catalog_sweep(int d_max, int exponent_bound, int n_max = 12) {
  std::vector<CatalogRow> rows;
  const RationalField QQ;
  const auto K = sqrt_minus_three_field();
  for_each_composite(d_max, exponent_bound, n_max, [&](const GroupId& g, const std::array<int, 3>& e) {
    rows.push_back(g.kind == GroupKind::A4 ? catalog_row(K, g, e) : catalog_row(QQ, g, e));
  });
  return rows;
}

}  // namespace pgl2
