#include <gtest/gtest.h>

#include <pgl2/stabilizer.hpp>

using namespace pgl2;
using QForm = BinaryForm<RationalField>;

namespace {

QForm qform(std::vector<Rational> c) { return QForm::from_rationals(RationalField{}, c); }

int order_of(const QForm& F) { return stabilizer(F).order; }

bool near(const SpherePoint& a, const SpherePoint& b) { return chordal_distance(a, b) < 1e-12; }

}  // namespace

TEST(Roots, MultiplicitiesAndInfinity) {
  auto roots = complex_roots(qform({0, 0, 1, 0, 0, 0}));  // x^3 y^2
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].multiplicity, 3);
  EXPECT_TRUE(near(roots[0].point, SpherePoint::finite(0.0)));
  EXPECT_EQ(roots[1].multiplicity, 2);
  EXPECT_TRUE(roots[1].point.is_infinite());
}

TEST(Roots, GaussianPair) {
  auto roots = complex_roots(qform({1, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  bool has_i = near(roots[0].point, SpherePoint::finite({0, 1})) || near(roots[1].point, SpherePoint::finite({0, 1}));
  bool has_mi = near(roots[0].point, SpherePoint::finite({0, -1})) || near(roots[1].point, SpherePoint::finite({0, -1}));
  EXPECT_TRUE(has_i && has_mi);
}

TEST(Roots, OctahedronVertices) {
  auto roots = complex_roots(qform({0, 1, 0, 0, 0, -1, 0}));
  ASSERT_EQ(roots.size(), 6u);
  const std::vector<SpherePoint> want{SpherePoint::finite(0.0), SpherePoint::infinity(), SpherePoint::finite(1.0),
                                      SpherePoint::finite(-1.0), SpherePoint::finite({0, 1}),
                                      SpherePoint::finite({0, -1})};
  for (const auto& w : want) {
    int hits = 0;
    for (const auto& r : roots) hits += near(r.point, w) ? 1 : 0;
    EXPECT_EQ(hits, 1) << w.format();
  }
}

TEST(Roots, AberthOnWilkinsonLike) {
  std::vector<Complex> c{1.0};
  for (int k = 1; k <= 12; ++k) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * double(k);
    }
    c = next;
  }
  auto res = polynomial_roots(c);
  EXPECT_TRUE(res.converged);
  std::vector<double> re;
  for (auto z : res.roots) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  for (int k = 1; k <= 12; ++k) EXPECT_NEAR(re[static_cast<std::size_t>(k - 1)], k, 1e-6);
}

TEST(Mobius, Through) {
  const auto zero = SpherePoint::finite(0.0), one = SpherePoint::finite(1.0), inf = SpherePoint::infinity();
  auto id = mobius_through(zero, one, inf, zero, one, inf);
  EXPECT_LT(distance(id, MobiusTransform::identity()), 1e-12);
  auto inv = mobius_through(zero, one, inf, inf, one, zero);
  EXPECT_LT(distance(inv, MobiusTransform(0, 1, 1, 0)), 1e-12);
  auto m = mobius_through(zero, one, inf, one, inf, zero);
  // z -> 1 / (1 - z)
  EXPECT_LT(distance(m, MobiusTransform(0, 1, -1, 1)), 1e-12);
  const SpherePoint z = SpherePoint::finite({0.3, -0.7});
  EXPECT_LT(chordal_distance(m(z), SpherePoint::finite(1.0 / (1.0 - z.value()))), 1e-12);
  EXPECT_THROW(mobius_through(zero, zero, inf, zero, one, inf), NumericError);
}

TEST(Stabilizer, ClassicalOrders) {
  EXPECT_EQ(order_of(qform({0, 1, 1, 0})), 6);                   // xy(x+y)
  EXPECT_EQ(order_of(qform({0, 1, 0, -1, 0})), 8);               // xy(x-y)(x+y)
  EXPECT_EQ(order_of(qform({1, 0, 0, 1, 0})), 12);               // x^4 + x y^3
  EXPECT_EQ(order_of(qform({0, 1, 0, 0, 0, -1, 0})), 24);        // x^5 y - x y^5
  // x y (x - y)(x - 3y): cross-ratio 3, generic
  EXPECT_EQ(order_of(qform({0, 3, -4, 1, 0})), 4);
}

TEST(Stabilizer, Icosahedral) {
  std::vector<Rational> c(13, Rational(0));
  c[1] = 1;
  c[6] = 11;
  c[11] = -1;
  auto res = stabilizer(qform(c));
  EXPECT_EQ(res.order, 60);
  EXPECT_TRUE(res.certified);
  EXPECT_TRUE(is_closed_group(res.elements));
}

TEST(Stabilizer, MultiplicitiesRestrictSymmetry) {
  // x^2 y (x - y): the double point is fixed, the simple ones may swap.
  EXPECT_EQ(order_of(qform({0, 2, -1, 0, 0}).scaled(Rational(1))), 2);
  EXPECT_THROW(stabilizer(qform({0, 0, 1})), DomainError);
}

TEST(Stabilizer, IndependentOfBaseTriple) {
  auto roots = complex_roots(qform({0, 1, 0, 0, 0, -1, 0}));
  for (std::array<std::size_t, 3> base : {std::array<std::size_t, 3>{0, 1, 2}, {5, 3, 1}, {2, 4, 0}})
    EXPECT_EQ(stabilizer(roots, 1e-9, base).order, 24);
}

TEST(Stabilizer, Equivalence) {
  auto a = complex_roots(qform({1, 0, 0, 1}));  // x^3 + y^3
  auto b = complex_roots(qform({0, 1, 1, 0}));  // xy(x+y)
  EXPECT_TRUE(find_equivalence(a, b).has_value());
  auto c = complex_roots(qform({0, 1, 0, -1, 0}));
  auto d = complex_roots(qform({1, 0, 0, 1, 0}));
  EXPECT_FALSE(find_equivalence(c, d).has_value());
}
