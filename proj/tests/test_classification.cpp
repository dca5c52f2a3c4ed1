#include <gtest/gtest.h>

#include <pgl2/classification.hpp>
#include <pgl2/parse.hpp>

#include "generators.hpp"

using namespace pgl2;
using pgl2::testing::Gen;

namespace {
using Form = BinaryForm<RationalField>;
const RationalField QQ;

Form form(std::vector<long> a) {
  std::vector<Rational> q;
  for (long x : a) q.emplace_back(x);
  return Form::from_rationals(QQ, q);
}

template <class Field>
StabilizerInput numeric_stabilizer(const BinaryForm<Field>& F) {
  const auto st = stabilizer(F, 1e-9);
  return {st.order, st.certified};
}

AbcValue v(int x, bool lower = false) { return {x, lower}; }
const AbcValue na{};
}  // namespace

TEST(Groups, OrdersAndNames) {
  EXPECT_EQ(GroupId::dihedral(5).order(), 10);
  EXPECT_EQ(GroupId::icosahedral().orbit_degrees(), (std::vector<int>{12, 20, 30}));
  EXPECT_EQ(GroupId::parse("Dn", 7), GroupId::dihedral(7));
  EXPECT_EQ(GroupId::parse("D4"), GroupId::dihedral(4));
  EXPECT_EQ(GroupId::parse("S4"), GroupId::octahedral());
  EXPECT_THROW(GroupId::parse("Dn"), ParseError);
  EXPECT_THROW(GroupId::parse("Q8"), ParseError);
  EXPECT_THROW(GroupId::parse("D1"), DomainError);
}

TEST(SpecialForms, Examples) {
  EXPECT_EQ(special_form(QQ, GroupId::octahedral(), SpecialOrbit::A), form({0, 1, 0, 0, 0, -1, 0}));
  EXPECT_EQ(special_form(QQ, GroupId::icosahedral(), SpecialOrbit::A).format(), "x^11*y + 11*x^6*y^6 - x*y^11");
  EXPECT_EQ(special_form(QQ, GroupId::dihedral(4), SpecialOrbit::C), form({1, 0, 0, 0, -1}));
  EXPECT_EQ(special_form(QQ, GroupId::dihedral(4), SpecialOrbit::A), form({0, 1, 0}));
}

TEST(SpecialForms, TetrahedralNeedsSqrtMinusThree) {
  try {
    special_form(QQ, GroupId::tetrahedral(), SpecialOrbit::A);
    FAIL() << "expected a field error";
  } catch (const FieldError& e) {
    EXPECT_NE(std::string(e.what()).find("t^2+3"), std::string::npos);
  }
  const auto K = sqrt_minus_three_field();
  const auto A = special_form(K, GroupId::tetrahedral(), SpecialOrbit::A);
  EXPECT_EQ(A, parse_form("x^4 + 2*t*x^2*y^2 + y^4", K));
  // The C form is defined over Q and is also the octahedral A form.
  EXPECT_EQ(special_form(K, GroupId::tetrahedral(), SpecialOrbit::C).format(), "x^5*y - x*y^5");
  // A * B is the octahedral B form.
  const auto AB = A * special_form(K, GroupId::tetrahedral(), SpecialOrbit::B);
  EXPECT_EQ(AB, parse_form("x^8 + 14*x^4*y^4 + y^8", K));
}

TEST(SpecialForms, StabilizersOfTheSpecialOrbits) {
  for (const auto& g : {GroupId::dihedral(3), GroupId::dihedral(5), GroupId::octahedral(), GroupId::icosahedral()})
    for (auto w : {SpecialOrbit::B, SpecialOrbit::C}) {
      const auto st = stabilizer(special_form(QQ, g, w), 1e-9);
      EXPECT_TRUE(st.certified);
      // D_3: the B and C orbits are only 3 points, whose stabilizer is S_3 = D_3; the
      // other orbits have exactly the group as stabilizer.
      EXPECT_EQ(st.order, g.order()) << g.name();
    }
}

TEST(ReduceByGcd, Examples) {
  auto [g, m] = reduce_by_gcd(form({1, 0, 0, 1}).pow(2));
  EXPECT_EQ(g, form({1, 0, 0, 1}));
  EXPECT_EQ(m, 2);
  std::tie(g, m) = reduce_by_gcd(form({1, 0, 0, 1, 0}));
  EXPECT_EQ(g, form({1, 0, 0, 1, 0}));
  EXPECT_EQ(m, 1);
  // x^6 y^3 (x + y)^3
  std::tie(g, m) = reduce_by_gcd(form({0, 1}).pow(3) * form({1, 0}).pow(6) * form({1, 1}).pow(3));
  EXPECT_EQ(m, 3);
  EXPECT_EQ(profile(g).multiplicities(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(g, form({0, 1, 1, 0}) * form({1, 0}));
}

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(form({0, 1, 1, 0}), {6, true}));
  EXPECT_TRUE(is_smooth(form({0, 1, 0, 0, 0, -1, 0}), numeric_stabilizer(form({0, 1, 0, 0, 0, -1, 0}))));
  const auto a5 = special_form(QQ, GroupId::icosahedral(), SpecialOrbit::A);
  EXPECT_TRUE(is_smooth(a5, numeric_stabilizer(a5)));
  Gen gen(55);
  const Form generic = gen.with_profile({1, 1, 1, 1, 1});
  const auto rep = assemble_report(generic, numeric_stabilizer(generic));
  EXPECT_EQ(rep.stabilizer_order, 1);
  EXPECT_EQ(rep.boundary[0].multiplicity, 18);
  EXPECT_EQ(rep.boundary[1].multiplicity, 10);
  EXPECT_FALSE(is_smooth(generic, {1, true}));
  // s <= 2
  EXPECT_TRUE(is_smooth(form({0, 0, 1, 0, 0}), {}));
  EXPECT_FALSE(is_smooth(form({0, 0, 0, 1, 0}), {}));
  EXPECT_TRUE(is_smooth(form({1, 0, 0}), {}));
  // Powers reduce first.
  EXPECT_TRUE(is_smooth(form({0, 1, 1, 0}).pow(3), {6, true}));
  EXPECT_THROW(is_smooth(generic, {}), DomainError);
}

TEST(SmoothCodim1, SpecialOrbitsQualify) {
  for (const auto& g : {GroupId::dihedral(3), GroupId::dihedral(6), GroupId::octahedral(), GroupId::icosahedral()})
    for (auto w : {SpecialOrbit::A, SpecialOrbit::B, SpecialOrbit::C}) {
      const auto F = special_form(QQ, g, w);
      if (profile(F).s() < 3) continue;
      EXPECT_TRUE(is_smooth_codim1(F, numeric_stabilizer(F))) << g.name() << " " << orbit_letter(w);
    }
  const auto K = sqrt_minus_three_field();
  for (auto w : {SpecialOrbit::A, SpecialOrbit::B, SpecialOrbit::C}) {
    const auto F = special_form(K, GroupId::tetrahedral(), w);
    EXPECT_TRUE(is_smooth_codim1(F, numeric_stabilizer(F))) << orbit_letter(w);
  }
}

TEST(SmoothCodim1, GenericTuplesDoNot) {
  Gen gen(56);
  for (int d = 4; d <= 8; ++d) {
    const Form F = gen.with_profile(std::vector<int>(static_cast<std::size_t>(d), 1), gen.coin());
    EXPECT_FALSE(is_smooth_codim1(F, numeric_stabilizer(F))) << F.format();
  }
}

TEST(SmoothCodim1, EqualExponentsCollide) {
  // D_4 with a = b: the A and B points share the Pair orbit.
  const auto F = composite(QQ, GroupId::dihedral(4), 1, 1, 2);
  EXPECT_EQ(numeric_stabilizer(F).order, 8);
  EXPECT_FALSE(is_smooth_codim1(F, numeric_stabilizer(F)));
}

TEST(SmoothCodim1, EnlargedSymmetryIsDetected) {
  // x y (x^4 + y^4)^2 (x^4 - y^4)^2 = x y (x^8 - y^8)^2 is D_8-symmetric: the
  // tabulated D_4 A-multiplicity is only a lower bound, and with the true
  // stabilizer the closure is smooth in codimension one.
  const auto F = composite(QQ, GroupId::dihedral(4), 1, 2, 2);
  EXPECT_EQ(numeric_stabilizer(F).order, 16);
  EXPECT_EQ(abc_multiplicities(GroupId::dihedral(4), 1, 2, 2).mult[0], v(2, true));
  EXPECT_TRUE(is_smooth_codim1(F, numeric_stabilizer(F)));
}

TEST(Abc, Examples) {
  auto m = abc_multiplicities(GroupId::octahedral(), 5852, 561, 19656);
  EXPECT_EQ(m.mult[2], v(3));
  m = abc_multiplicities(GroupId::icosahedral(), Integer(26864005), Integer(431607), Integer(43733250));
  EXPECT_EQ(m.mult[2], v(3));
  m = abc_multiplicities(GroupId::dihedral(5), 1, 1, 2);
  EXPECT_EQ(m.mult[0], v(1));
  m = abc_multiplicities(GroupId::dihedral(4), 1, 2, 3);
  EXPECT_EQ(m.mult[0], v(1));
}

TEST(Abc, ExceptionalTriplesMatchUpToPositiveScaling) {
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 2 * 5852, 2 * 561, 2 * 19656).mult[2], v(3));
  EXPECT_EQ(abc_multiplicities(GroupId::icosahedral(), Integer(3 * 26864005L), Integer(3 * 431607L),
                               Integer(3 * 43733250L))
                .mult[2],
            v(3));
  // Off the exceptional ray but on the C-condition hyperplane 45a - 84b - 11c = 0.
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 84 * 11, 45 * 11, 0).mult[2], na);
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 11, 0, 45).mult[2], v(2));
}

TEST(Abc, Conditions) {
  // D_n scaled by 6: B fails iff -6a + (n-1)(n-2) b + 3n(n-1) c = 0.
  EXPECT_EQ(abc_multiplicities(GroupId::dihedral(3), 1, 3, 0).mult[1], v(2, true));
  EXPECT_EQ(abc_multiplicities(GroupId::dihedral(3), 1, 2, 0).mult[1], v(1));
  EXPECT_EQ(abc_multiplicities(GroupId::dihedral(3), 1, 0, 3).mult[2], v(2, true));
  // A4
  EXPECT_EQ(abc_multiplicities(GroupId::tetrahedral(), 8, 1, 0).mult[0], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::tetrahedral(), 1, 8, 0).mult[1], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::tetrahedral(), 1, 2, 1).mult[2], v(1));
  EXPECT_EQ(abc_multiplicities(GroupId::tetrahedral(), 1, 1, 5).mult[2], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::tetrahedral(), 1, 1, 14).mult[2], v(4));
  // S4
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 14, 1, 0).mult[0], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 7, 20, 0).mult[1], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::octahedral(), 84, 45, 0).mult[2], na);
  // A5
  EXPECT_EQ(abc_multiplicities(GroupId::icosahedral(), 228, 11, 0).mult[0], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::icosahedral(), 57, 88, 0).mult[1], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::icosahedral(), 58, 0, 99).mult[2], v(2));
  EXPECT_EQ(abc_multiplicities(GroupId::icosahedral(), 1, 1, 1).mult, (std::array<AbcValue, 3>{v(1), v(1), v(1)}));
}

TEST(Abc, TetrahedralWarningExactlyWhenAEqualsB) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        if (a + b + c == 0) continue;
        const auto m = abc_multiplicities(GroupId::tetrahedral(), a, b, c);
        EXPECT_EQ(!m.warnings.empty(), a == b) << a << b << c;
      }
  const auto m = abc_multiplicities(GroupId::tetrahedral(), 1, 1, 5);
  ASSERT_EQ(m.warnings.size(), 1u);
  EXPECT_NE(m.warnings[0].find("S_4"), std::string::npos);
  EXPECT_EQ(m.effective_c, 1);
}

TEST(Abc, Errors) {
  EXPECT_THROW(abc_multiplicities(GroupId::cyclic(3), 1, 1, 1), DomainError);
  EXPECT_THROW(abc_multiplicities(GroupId::dihedral(4), 1, 0, 0), DomainError);
  EXPECT_THROW(abc_multiplicities(GroupId::octahedral(), -1, 1, 1), DomainError);
}

TEST(Abc, PipelineAgreesOnDihedralCubic) {
  // x y (x^3 + y^3)
  const auto g = GroupId::dihedral(3);
  const auto F = composite(QQ, g, 1, 1, 0);
  EXPECT_EQ(F, form({0, 1, 0, 0, 1, 0}));
  for (const auto& ch : abc_pipeline_check(F, g, {1, 1, 0}, abc_multiplicities(g, 1, 1, 0)))
    EXPECT_TRUE(ch.agrees) << ch.orbits;
}

TEST(Abc, PipelineAgreesOverSqrtMinusThree) {
  const auto K = sqrt_minus_three_field();
  const auto g = GroupId::tetrahedral();
  for (const auto& e : std::vector<std::array<int, 3>>{{1, 2, 0}, {2, 1, 1}, {1, 1, 1}, {0, 1, 2}, {3, 1, 0}}) {
    const auto F = composite(K, g, e[0], e[1], e[2]);
    for (const auto& ch : abc_pipeline_check(F, g, e, abc_multiplicities(g, e[0], e[1], e[2])))
      EXPECT_TRUE(ch.agrees) << e[0] << e[1] << e[2] << " " << ch.orbits << " " << ch.pipeline << " vs "
                             << ch.tabulated;
  }
}

TEST(Catalog, UpgradedTetrahedralStabilizer) {
  const auto K = sqrt_minus_three_field();
  const auto row = catalog_row(K, GroupId::tetrahedral(), {1, 1, 1});
  EXPECT_EQ(row.report.stabilizer_order, 24);
  const auto row2 = catalog_row(K, GroupId::tetrahedral(), {1, 2, 0});
  EXPECT_EQ(row2.report.stabilizer_order, 12);
}
