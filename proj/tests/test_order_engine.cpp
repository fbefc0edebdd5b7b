#include <gtest/gtest.h>

#include <random>

#include "qplane/hesse_curve.hpp"
#include "qplane/order_engine.hpp"
#include "support/table1_reference.hpp"

using namespace qplane;
using namespace qplane::testing;

namespace {

SigmaSystem system_for(Table1Row row, const Table1Params& params = {}) {
  return SigmaSystem::from_algebra(table1(row, params));
}

Table1Params alpha(const Scalar& a) { return {a, {}}; }

// The same algebra after the substitution x_i -> sum_a m[i][a] x_a.
QuadraticAlgebra change_coordinates(const QuadraticAlgebra& a, const Mat3& m) {
  std::array<RelationTensor, 3> rel;
  for (int k = 0; k < 3; ++k) {
    for (auto& r : rel[k]) r.fill(Scalar(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Scalar& c = a.relation(k)[i][j];
        if (c.is_zero()) continue;
        for (int u = 0; u < 3; ++u)
          for (int v = 0; v < 3; ++v) rel[k][u][v] += c * m[i][u] * m[j][v];
      }
  }
  return QuadraticAlgebra(rel);
}

Mat3 random_invertible(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Mat3 m(3, std::vector<Scalar>(3));
    for (auto& row : m)
      for (auto& e : row) e = Scalar(d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

// |alpha^3| by direct powering; alpha = 2 is visibly not a root of unity.
OrderResult cube_order_oracle(const Scalar& a) {
  const Scalar c = a.pow(3);
  for (long n = 1; n <= 12; ++n)
    if (c.pow(n).is_one()) return OrderResult::exact(n);
  return OrderResult::infinite(InfinityReason::NonRootOfUnity);
}

}  // namespace

TEST(ProjectiveMap, CanonicalScaling) {
  Mat3 m = identity_matrix<Scalar>(3);
  for (auto& r : m)
    for (auto& e : r) e *= Scalar(5);
  EXPECT_TRUE(ProjectiveMap(m).is_identity());
  EXPECT_THROW(ProjectiveMap(Mat3(3, std::vector<Scalar>(3, Scalar(1)))), InputError);
}

TEST(ProjectiveOrder, SmallMatrices) {
  const Scalar w = omega();
  EXPECT_EQ(projective_order(ProjectiveMap(mat3({{{1, 0, 0}, {0, w, 0}, {0, 0, w * w}}}))), OrderResult::exact(3));
  EXPECT_EQ(projective_order(ProjectiveMap(mat3({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}))), OrderResult::exact(3));
  EXPECT_EQ(projective_order(ProjectiveMap(mat3({{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}}))),
            OrderResult::infinite(InfinityReason::NonRootOfUnity));
  EXPECT_EQ(projective_order(ProjectiveMap(mat3({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}))),
            OrderResult::infinite(InfinityReason::AdditiveUnipotent));
  EXPECT_EQ(projective_order(ProjectiveMap(mat3({{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}))), OrderResult::exact(2));
}

TEST(Fit, SpecExamples) {
  const Scalar z = zeta6();
  const auto s1 = system_for(Table1Row::S1, alpha(z));
  const auto t = fit_projective_extension(s1, 2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, ProjectiveMap(mat3({{{1, 0, 0}, {0, z.pow(2), 0}, {0, 0, z.pow(4)}}})));
  EXPECT_FALSE(fit_projective_extension(system_for(Table1Row::S1, alpha(Scalar(2))), 1).has_value());
  const auto t1 = system_for(Table1Row::T1);
  for (long i = 1; i <= 5; ++i) EXPECT_FALSE(fit_projective_extension(t1, i).has_value()) << i;
  EXPECT_THROW(fit_projective_extension(s1, 0), InputError);
  EXPECT_THROW(system_for(Table1Row::TL, alpha(omega())).samples(4), InputError);
}

TEST(Fit, SampleIndependent) {
  for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC}) {
    const auto s = system_for(row, alpha(zeta6()));
    const auto a = fit_projective_extension(s, 2, {8, 0});
    const auto b = fit_projective_extension(s, 2, {8, 16});
    ASSERT_TRUE(a && b) << to_string(row);
    EXPECT_EQ(*a, *b) << to_string(row);
  }
}

TEST(Fit, MonotoneUnderMultiples) {
  for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC}) {
    const auto s = system_for(row, alpha(zeta6()));
    const auto t = fit_projective_extension(s, 2);
    ASSERT_TRUE(t) << to_string(row);
    for (long k : {2, 3}) {
      const auto tk = fit_projective_extension(s, 2 * k);
      ASSERT_TRUE(tk) << to_string(row) << " k=" << k;
      EXPECT_EQ(*tk, t->pow(k)) << to_string(row) << " k=" << k;
    }
  }
}

TEST(SigmaNorm, SpecExamples) {
  EXPECT_EQ(sigma_norm(system_for(Table1Row::P, alpha(omega()))).order, OrderResult::exact(1));
  EXPECT_EQ(sigma_norm(system_for(Table1Row::S1, alpha(zeta6()))).order, OrderResult::exact(2));
  EXPECT_EQ(sigma_norm(system_for(Table1Row::NC, alpha(Scalar(2)))).order,
            OrderResult::infinite(InfinityReason::NonRootOfUnity));
  EXPECT_EQ(sigma_norm(system_for(Table1Row::CC)).order, OrderResult::infinite(InfinityReason::TypeRule));
  const NormResult ec = sigma_norm(system_for(Table1Row::EC, {{}, two_torsion_s()}));
  EXPECT_EQ(ec.order, OrderResult::exact(2));
  EXPECT_EQ(ec.rule, "translation");
  EXPECT_THROW(sigma_norm(system_for(Table1Row::CC), {0, 10}), InputError);
}

TEST(SigmaNorm, EqualsOrderOfSigmaCubedOnCorpus) {
  for (const Scalar& a : {zeta6(), Scalar(2)})
    for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC}) {
      const NormResult r = sigma_norm(system_for(row, alpha(a)));
      EXPECT_EQ(r.order, cube_order_oracle(a)) << to_string(row) << " alpha=" << a;
      EXPECT_EQ(r.witness.has_value(), r.order.is_exact());
    }
  for (Table1Row row : {Table1Row::T1, Table1Row::T3, Table1Row::TPrime, Table1Row::CC, Table1Row::WL})
    EXPECT_EQ(sigma_norm(system_for(row)).order, OrderResult::infinite(InfinityReason::TypeRule)) << to_string(row);
  EXPECT_EQ(sigma_norm(system_for(Table1Row::TL, alpha(omega()))).order,
            OrderResult::infinite(InfinityReason::TypeRule));
  // |3s| = |s| for a 2-torsion point, read off the group law directly.
  const HessePoint s(HesseCurve::create(Scalar(1)), ProjPoint(two_torsion_s()));
  ASSERT_TRUE(ec_add(s, s).is_identity());
  EXPECT_EQ(sigma_norm(system_for(Table1Row::EC, {{}, two_torsion_s()})).order, OrderResult::exact(2));
}

TEST(SigmaNorm, WitnessesAreSound) {
  std::vector<SigmaSystem> exact;
  exact.push_back(system_for(Table1Row::P, alpha(omega())));
  for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC})
    exact.push_back(system_for(row, alpha(zeta6())));
  exact.push_back(system_for(Table1Row::EC, {{}, two_torsion_s()}));
  for (const auto& s : exact) {
    const NormResult r = sigma_norm(s);
    ASSERT_TRUE(r.order.is_exact() && r.witness);
    const WitnessCheck w = check_witness(s, r.order.value, *r.witness);
    EXPECT_TRUE(w.ok()) << to_string(s.classification().type);
    EXPECT_GE(w.points_checked, 16u);
  }
}

TEST(SigmaNorm, InvariantUnderCoordinateChange) {
  std::mt19937 rng(5);
  for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC})
    for (const Scalar& a : {zeta6(), Scalar(2)}) {
      const Mat3 m = random_invertible(rng);
      const auto s = SigmaSystem::from_algebra(change_coordinates(table1(row, alpha(a)), m));
      EXPECT_EQ(sigma_norm(s).order, cube_order_oracle(a)) << to_string(row) << " alpha=" << a;
    }
}

TEST(SigmaOrder, SpecExamples) {
  EXPECT_EQ(sigma_order(system_for(Table1Row::S1, alpha(zeta6()))).order, OrderResult::exact(6));
  EXPECT_EQ(sigma_order(system_for(Table1Row::P, alpha(omega()))).order, OrderResult::exact(3));
  EXPECT_EQ(sigma_order(system_for(Table1Row::T1)).order, OrderResult::infinite(InfinityReason::AdditiveUnipotent));
}

TEST(SigmaOrder, IteratedOracleAndDivisibility) {
  // Independent oracle: iterate sigma on parametrized points until every one
  // returns, within a small bound.
  auto iterate = [](const SigmaSystem& s) -> long {
    const auto pts = s.samples(3);
    for (long n = 1; n <= 24; ++n) {
      bool all = true;
      for (const auto& p : pts) all = all && s.sigma_power(p, n) == p;
      if (all) return n;
    }
    return -1;
  };
  for (Table1Row row : {Table1Row::S1, Table1Row::S3, Table1Row::SPrime, Table1Row::NC}) {
    const auto s = system_for(row, alpha(zeta6()));
    const auto ord = sigma_order(s).order;
    const auto norm = sigma_norm(s).order;
    ASSERT_TRUE(ord.is_exact()) << to_string(row);
    EXPECT_EQ(ord.value, iterate(s)) << to_string(row);
    EXPECT_EQ(ord.value % norm.value, 0) << to_string(row);
  }
  EXPECT_EQ(sigma_order(system_for(Table1Row::EC, {{}, two_torsion_s()})).order, OrderResult::exact(2));
  for (Table1Row row : {Table1Row::T3, Table1Row::TPrime, Table1Row::CC})
    EXPECT_EQ(sigma_order(system_for(row)).order, OrderResult::infinite(InfinityReason::AdditiveUnipotent))
        << to_string(row);
  EXPECT_EQ(sigma_order(system_for(Table1Row::S1, alpha(Scalar(2)))).order,
            OrderResult::infinite(InfinityReason::NonRootOfUnity));
}

TEST(SigmaSystem, RejectsMismatchedClassification) {
  const QuadraticAlgebra a = table1(Table1Row::CC);
  EXPECT_THROW(SigmaSystem(a, classify_cubic(parse_form("x*y*z"))), InputError);
}
