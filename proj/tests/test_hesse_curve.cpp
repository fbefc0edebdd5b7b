#include <gtest/gtest.h>

#include <random>

#include "qplane/cubic_classify.hpp"
#include "qplane/expr.hpp"
#include "qplane/hesse_curve.hpp"
#include "support/hesse_points.hpp"

using namespace qplane;

namespace {

ProjPoint P(long a, long b, long c) { return ProjPoint(Scalar(a), Scalar(b), Scalar(c)); }

Scalar det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Chord-tangent oracle: p + q = r exactly when p, q and -r lie on one line
// meeting the curve there (the tangent at p when p = q), and -r is the third
// intersection rather than p or q (unless the line is tangent there).
void expect_chord_rule(const HessePoint& p, const HessePoint& q, const HessePoint& r) {
  const Vec3 neg = ec_negate(r).point().coords();
  const TernaryForm& g = p.curve()->equation();
  ASSERT_TRUE(g.evaluate(r.point()).is_zero());
  if (p != q) {
    EXPECT_TRUE(det3(p.point().coords(), q.point().coords(), neg).is_zero());
  } else {
    const Vec3 grad{g.derivative(0).evaluate(p.point()), g.derivative(1).evaluate(p.point()),
                    g.derivative(2).evaluate(p.point())};
    EXPECT_TRUE(dot(grad, neg).is_zero());
  }
}

struct TwoTorsion {
  CurvePtr curve;
  HessePoint s;
};

TwoTorsion two_torsion_point() {
  const auto r = declare_field("r", "2*r^3 - r^2 + 1");
  auto curve = HesseCurve::create(Scalar(1));
  return {curve, HessePoint(curve, ProjPoint(r.generator_value, r.generator_value, Scalar(1)))};
}

}  // namespace

TEST(HesseCurve, RejectsSingularAndOffCurve) {
  EXPECT_THROW(HesseCurve::create(Scalar(3)), InputError);
  const auto c = HesseCurve::create(Scalar(1));
  EXPECT_THROW(HessePoint(c, P(1, 1, 1)), InputError);
  const auto other = HesseCurve::create(Scalar(2));
  EXPECT_THROW(ec_add(HessePoint::identity(c), HessePoint::identity(other)), InputError);
  EXPECT_THROW(point_order(HessePoint::identity(c), 0), InputError);
}

TEST(GroupLaw, SpecExamples) {
  const auto c = HesseCurve::create(Scalar(1));
  const HessePoint o = HessePoint::identity(c), p(c, P(0, 1, -1));
  EXPECT_EQ(ec_add(o, p), p);
  EXPECT_EQ(ec_add(p, o), p);
  EXPECT_TRUE(ec_add(p, ec_negate(p)).is_identity());
  EXPECT_EQ(point_order(o, 5), OrderResult::exact(1));
  EXPECT_EQ(point_order(p, 5), OrderResult::exact(3));
}

TEST(GroupLaw, TwoTorsionPoint) {
  const auto [curve, s] = two_torsion_point();
  const HessePoint twice = ec_add(s, s);
  EXPECT_TRUE(twice.is_identity());
  expect_chord_rule(s, s, twice);
  EXPECT_EQ(point_order(s, 10), OrderResult::exact(2));
  EXPECT_EQ(point_order(ec_multiply(s, 3), 10), OrderResult::exact(2));
  EXPECT_FALSE(translation_is_linear(s));
}

TEST(ThreeTorsion, FermatCurveAndCounts) {
  for (int lam : {0, 1, 2}) {
    const auto c = HesseCurve::create(Scalar(lam));
    const auto t = three_torsion(c);
    ASSERT_EQ(t.size(), 9u);
    for (const auto& p : t) {
      EXPECT_TRUE(ec_multiply(p, 3).is_identity());
      EXPECT_TRUE(translation_is_linear(p));
      EXPECT_NE(std::find(t.begin(), t.end(), ec_negate(p)), t.end());
      for (const auto& q : t) EXPECT_NE(std::find(t.begin(), t.end(), ec_add(p, q)), t.end());
    }
    EXPECT_NE(std::find(t.begin(), t.end(), HessePoint::identity(c)), t.end());
    int order3 = 0;
    for (const auto& p : t) order3 += point_order(p, 5) == OrderResult::exact(3);
    EXPECT_EQ(order3, 8);
  }
  // On lambda = 0: (1, -w^k, 0), (0, 1, -w^k), (-w^k, 0, 1).
  const auto t = three_torsion(HesseCurve::create(Scalar(0)));
  for (const auto& p : t) {
    int zeros = 0;
    for (int i = 0; i < 3; ++i) zeros += p.point()[i].is_zero();
    EXPECT_EQ(zeros, 1);
  }
}

TEST(GroupLaw, PropertySuite) {
  for (int lam : {0, 1, 2}) {
    const auto c = HesseCurve::create(Scalar(lam));
    const auto pool = qplane::testing::point_pool(c, 16);
    std::mt19937 rng(100 + lam);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 50; ++i) {
      const HessePoint& p = pool[pick(rng)];
      const HessePoint& q = pool[pick(rng)];
      const HessePoint r = ec_add(p, q);
      expect_chord_rule(p, q, r);
      EXPECT_EQ(r, ec_add(q, p));
      EXPECT_EQ(ec_add(p, HessePoint::identity(c)), p);
      EXPECT_TRUE(ec_add(p, ec_negate(p)).is_identity());
    }
    for (int i = 0; i < 20; ++i) {
      const HessePoint& p = pool[pick(rng)];
      const HessePoint& q = pool[pick(rng)];
      const HessePoint& r = pool[pick(rng)];
      EXPECT_EQ(ec_add(ec_add(p, q), r), ec_add(p, ec_add(q, r)));
    }
  }
}

TEST(GroupLaw, FlexCasesUseTheLineFallback) {
  // The closed formulas vanish on some flex pairs; sums must still be right.
  const auto c = HesseCurve::create(Scalar(2));
  const auto t = three_torsion(c);
  for (const auto& p : t)
    for (const auto& q : t) expect_chord_rule(p, q, ec_add(p, q));
}

TEST(PointOrder, MultiplesAndMinimality) {
  const auto c = HesseCurve::create(Scalar(1));
  const auto pool = qplane::testing::point_pool(c, 3);
  EXPECT_EQ(point_order(pool[0], 20), OrderResult::unknown(20));
  const auto [curve, s] = two_torsion_point();
  const HessePoint flex(curve, P(0, 1, -1));
  const HessePoint six = ec_add(s, flex);
  const OrderResult n = point_order(six, 50);
  ASSERT_EQ(n, OrderResult::exact(6));
  for (long m = 1; m < 6; ++m) EXPECT_FALSE(ec_multiply(six, m).is_identity());
  EXPECT_TRUE(ec_multiply(six, 6).is_identity());
  EXPECT_EQ(ec_multiply(six, -1), ec_negate(six));
}
