#include <gtest/gtest.h>

#include <random>

#include "qplane/quantum_algebra.hpp"

using namespace qplane;

namespace {

QuadraticAlgebra A(const char* f1, const char* f2, const char* f3, const DeclaredField* field = nullptr) {
  return QuadraticAlgebra::from_strings({f1, f2, f3}, field);
}

ProjPoint P(long a, long b, long c) { return ProjPoint(Scalar(a), Scalar(b), Scalar(c)); }

Scalar leibniz_det(const Mat3& m) {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1] -
         m[0][2] * m[1][1] * m[2][0] - m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

RelationTensor random_tensor(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  RelationTensor t;
  for (auto& row : t)
    for (auto& e : row) e = Scalar(d(rng));
  return t;
}

Vec3 random_vec(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return {Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
}

}  // namespace

TEST(Multilinearize, SkewAlgebraByHand) {
  // yz - 2zy, zx - 2xz, xy - 2yx. Row k of M(p) collects the coefficient of
  // each right-hand variable after fixing the left factor to p.
  const auto a = A("y*z - 2*z*y", "z*x - 2*x*z", "x*y - 2*y*x");
  const Vec3 p{Scalar(3), Scalar(5), Scalar(7)};
  const Mat3 expected = mat3({{{Scalar(0), Scalar(-2 * 7), Scalar(5)},
                               {Scalar(7), Scalar(0), Scalar(-2 * 3)},
                               {Scalar(-2 * 5), Scalar(3), Scalar(0)}}});
  EXPECT_EQ(evaluate(multilinearize(a), p), expected);
  const PointScheme e = point_scheme(a);
  ASSERT_FALSE(e.is_plane);
  EXPECT_EQ(e.cubic.to_string(), "x*y*z");
}

TEST(Multilinearize, MatchesBilinearEvaluationOnRandomAlgebras) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 15) {
    std::array<RelationTensor, 3> t{random_tensor(rng), random_tensor(rng), random_tensor(rng)};
    std::optional<QuadraticAlgebra> a;
    try {
      a.emplace(t);
    } catch (const InputError&) {
      continue;
    }
    ++checked;
    const MultilinearMatrix m = multilinearize(*a);
    const PointScheme e = point_scheme(*a);
    for (int s = 0; s < 5; ++s) {
      const Vec3 p = random_vec(rng), q = random_vec(rng);
      const Mat3 mp = evaluate(m, p);
      for (int k = 0; k < 3; ++k)
        EXPECT_EQ(a->evaluate(k, p, q), mp[k][0] * q[0] + mp[k][1] * q[1] + mp[k][2] * q[2]);
      if (e.is_plane) {
        EXPECT_TRUE(leibniz_det(mp).is_zero());
      } else {
        // det M(p) agrees with the normalized cubic up to one global factor.
        const Scalar d = leibniz_det(mp), g = e.cubic.evaluate(p);
        EXPECT_EQ(d.is_zero(), g.is_zero());
      }
    }
  }
}

TEST(PointScheme, PolynomialRingIsThePlane) {
  const auto a = A("y*z - z*y", "z*x - x*z", "x*y - y*x");
  const PointScheme e = point_scheme(a);
  EXPECT_TRUE(e.is_plane);
  for (const auto& p : {P(1, 2, 3), P(0, 1, -4), P(5, 0, 0)}) EXPECT_EQ(*sigma_eval(a, e, p), p);
}

TEST(Sigma, DiagonalAutomorphism) {
  const auto a = A("y*z - 2*z*y", "z*x - 2*x*z", "x*y - 2*y*x");
  EXPECT_EQ(*sigma_eval(a, P(1, 1, 0)), P(1, 2, 0));
  EXPECT_EQ(*sigma_eval(a, P(0, 1, 1)), P(0, 1, 2));
  EXPECT_EQ(*sigma_eval(a, P(1, 0, 1)), P(2, 0, 1));
  EXPECT_THROW(sigma_eval(a, P(1, 1, 1)), InputError);
}

TEST(Sigma, RankOneMeansUndefined) {
  const auto a = A("x*x", "y*y", "z*z");
  EXPECT_EQ(point_scheme(a).cubic.to_string(), "x*y*z");
  EXPECT_FALSE(sigma_eval(a, P(1, 0, 0)).has_value());
  EXPECT_EQ(*sigma_eval(a, P(1, 1, 0)), P(0, 0, 1));
}

TEST(Sigma, InverseRecoversPointOnRandomSkewFamilies) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 10; ++trial) {
    int alpha = 0;
    while (alpha == 0 || alpha == 1) alpha = d(rng);
    const std::string s = std::to_string(alpha);
    const auto a = QuadraticAlgebra::from_strings({"y*z - " + s + "*z*y + x^2", "z*x - " + s + "*x*z", "x*y - " + s + "*y*x"});
    const PointScheme e = point_scheme(a);
    // Points on the line x = 0 belong to every member of this family.
    for (int i = 0; i < 4; ++i) {
      const ProjPoint p = P(0, d(rng) == 0 ? 1 : d(rng), 1 + i);
      const auto q = sigma_eval(a, e, p);
      ASSERT_TRUE(q.has_value());
      for (int k = 0; k < 3; ++k) EXPECT_TRUE(a.evaluate(k, p.coords(), q->coords()).is_zero());
      EXPECT_EQ(*sigma_inverse_eval(a, *q), p);
    }
  }
}

TEST(GraphCheck, PointwiseWitnesses) {
  const auto a = A("y*z - 3*z*y", "z*x - 3*x*z", "x*y - 3*y*x");
  const GraphCheck c = verify_g1_graph(a, {P(0, 1, 2), P(1, 0, 5), P(2, 3, 0)});
  EXPECT_TRUE(c.holds);
  ASSERT_EQ(c.witnesses.size(), 3u);
  EXPECT_EQ(*c.witnesses[0].image, P(0, 1, 6));
  EXPECT_THROW(verify_g1_graph(a, {P(1, 1, 1)}), InputError);
}

TEST(GraphCheck, SymbolicCuspidalMap) {
  const auto a = A("y*z - z*y + y^2 + 3*x^2", "z*x - x*z + y*x + x*y - y*z - z*y", "x*y - y*x - y^2");
  const PointScheme e = point_scheme(a);
  ASSERT_FALSE(e.is_plane);
  EXPECT_TRUE(proportional(e.cubic, parse_form("x^3 - y^2*z")));
  // sigma with the denominator b cleared: (ab - b^2, b^2, -3a^2 + 3ab - b^2 + bc).
  const std::array<TernaryForm, 3> sigma{parse_form("x*y - y^2"), parse_form("y^2"),
                                         parse_form("-3*x^2 + 3*x*y - y^2 + y*z")};
  const SymbolicGraphCheck ok = verify_g1_symbolic(a, e.cubic, sigma);
  EXPECT_TRUE(ok.holds);
  EXPECT_FALSE(ok.products[1].is_zero());
  // Dropping the 3ab term breaks the graph condition.
  const std::array<TernaryForm, 3> wrong{sigma[0], sigma[1], parse_form("-3*x^2 - y^2 + y*z")};
  EXPECT_FALSE(verify_g1_symbolic(a, e.cubic, wrong).holds);
}

TEST(Parsing, RejectsBadRelations) {
  EXPECT_THROW(A("x*y", "y*x", "x*y + y*x"), InputError);
  EXPECT_THROW(A("x*y*z", "y*x", "z*z"), InputError);
  EXPECT_THROW(A("x", "y*x", "z*z"), InputError);
  EXPECT_THROW(A("x*y", "2*x*y", "z*z"), InputError);
}

TEST(Parsing, RelationStringsRoundTrip) {
  const auto field = declare_field("w", "w^2 + w + 1");
  const auto a = A("y*z - w*z*y - x^2", "z*x - w*x*z", "x*y - w*y*x", &field);
  EXPECT_EQ(a.field(), field.field);
  for (int k = 0; k < 3; ++k) {
    const auto b = A(a.relation_string(0).c_str(), a.relation_string(1).c_str(), a.relation_string(2).c_str(), &field);
    EXPECT_EQ(b.relation(k), a.relation(k)) << a.relation_string(k);
  }
  EXPECT_EQ(A("y*z - z*y - (1/3)*y^2", "z*x - x*z", "x*y - y*x").relation_string(0), "y*z - z*y - 1/3*y*y");
}
