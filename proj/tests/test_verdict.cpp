#include <gtest/gtest.h>

#include "qplane/io.hpp"
#include "qplane/table1.hpp"
#include "qplane/verdict.hpp"
#include "support/table1_reference.hpp"

using namespace qplane;
using namespace qplane::testing;

namespace {

Table1Params alpha(const Scalar& a) { return {a, {}}; }

bool has_citation(const VerdictReport& r, const std::string& id) {
  return std::find(r.citations.begin(), r.citations.end(), id) != r.citations.end();
}

// Expected ||sigma|| for a reference case, from the row alone: 1 on the plane,
// |alpha^3| on the torus-type rows, 2 for the chosen 2-torsion point, and
// infinite by type for the rest.
OrderResult expected_norm(const RefCase& c) {
  switch (c.row) {
    case Table1Row::P: return OrderResult::exact(1);
    case Table1Row::S1:
    case Table1Row::S3:
    case Table1Row::SPrime:
    case Table1Row::NC: {
      const Scalar cube = c.params.alpha->pow(3);
      for (long n = 1; n <= 12; ++n)
        if (cube.pow(n).is_one()) return OrderResult::exact(n);
      return OrderResult::infinite(InfinityReason::NonRootOfUnity);
    }
    case Table1Row::EC: return OrderResult::exact(2);
    default: return OrderResult::infinite(InfinityReason::TypeRule);
  }
}

}  // namespace

TEST(Verdict, SpecExamples) {
  const VerdictReport s1 = verdict(table1(Table1Row::S1, alpha(zeta6())));
  EXPECT_EQ(s1.classification.type, CubicType::S);
  EXPECT_EQ(s1.sigma_norm.order, OrderResult::exact(2));
  EXPECT_EQ(s1.sigma_order.order, OrderResult::exact(6));
  EXPECT_EQ(s1.has_fat_point, Tri::True);
  EXPECT_EQ(s1.proj_finite_over_center, Tri::True);
  EXPECT_EQ(s1.algebra_finite_over_center, Tri::True);
  EXPECT_EQ(s1.second_hessian_zero, std::optional<bool>(false));
  EXPECT_TRUE(has_citation(s1, "beilinson.fat-points"));

  const VerdictReport cc = verdict(table1(Table1Row::CC));
  EXPECT_EQ(cc.classification.type, CubicType::CC);
  EXPECT_EQ(cc.sigma_norm.order, OrderResult::infinite(InfinityReason::TypeRule));
  EXPECT_EQ(cc.has_fat_point, Tri::False);
  EXPECT_EQ(cc.proj_finite_over_center, Tri::False);
  EXPECT_EQ(cc.algebra_finite_over_center, Tri::False);
  EXPECT_EQ(cc.second_hessian_zero, std::optional<bool>(true));
  EXPECT_TRUE(has_citation(cc, "second-hessian.never-finite"));
  EXPECT_NE(cc.beilinson_parameterization.find("closed points of the cubic E"), std::string::npos);

  const VerdictReport p = verdict(table1(Table1Row::P, alpha(omega())));
  EXPECT_TRUE(p.is_plane());
  EXPECT_EQ(p.sigma_norm.order, OrderResult::exact(1));
  EXPECT_EQ(p.has_fat_point, Tri::False);
  EXPECT_EQ(p.proj_finite_over_center, Tri::True);
  EXPECT_FALSE(p.second_hessian_zero.has_value());
  EXPECT_NE(p.beilinson_parameterization.find("E = P^2"), std::string::npos);
  EXPECT_TRUE(p.assumed_regular);
}

TEST(Verdict, ConsistencyOverCorpus) {
  for (const RefCase& c : reference_cases(4)) {
    const VerdictReport r = verdict(table1(c.row, c.params));
    const OrderResult& n = r.sigma_norm.order;
    EXPECT_EQ(n, expected_norm(c)) << c.label;
    EXPECT_EQ(r.has_fat_point == Tri::True, n.is_exact() && n.value >= 2) << c.label;
    if (r.proj_finite_over_center == Tri::True)
      EXPECT_TRUE(r.has_fat_point == Tri::True || r.is_plane()) << c.label;
    if (r.second_hessian_zero.value_or(false)) EXPECT_NE(r.algebra_finite_over_center, Tri::True) << c.label;
    EXPECT_EQ(r.second_hessian_zero.value_or(false), !r.is_plane() && is_second_hessian_type(c.type)) << c.label;
    EXPECT_FALSE(r.beilinson_parameterization.empty()) << c.label;
  }
}

TEST(Verdict, UnknownNeverBecomesBoolean) {
  // With a fit cap below the true exponent the S1 norm is out of reach.
  const VerdictReport r = verdict(table1(Table1Row::S1, alpha(zeta6())), {1, 200});
  EXPECT_TRUE(r.sigma_norm.order.is_unknown());
  EXPECT_EQ(r.has_fat_point, Tri::Unknown);
  EXPECT_EQ(r.proj_finite_over_center, Tri::Unknown);
}

TEST(Verdict, StageAttribution) {
  try {
    verdict(table1(Table1Row::CC), {0, 200});
    FAIL() << "cap 0 accepted";
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("sigma-norm: ", 0), 0u) << e.what();
  }
}

TEST(Io, DeterministicJson) {
  const std::vector<QuadraticAlgebra> corpus = {table1(Table1Row::S1, alpha(zeta6())),
                                                 table1(Table1Row::EC, {{}, two_torsion_s()}), table1(Table1Row::CC)};
  for (const QuadraticAlgebra& a : corpus) EXPECT_EQ(to_json(verdict(a)).dump(), to_json(verdict(a)).dump());
}

TEST(Io, EmitParseReproducesEveryRow) {
  for (const RefCase& c : reference_cases(4)) {
    const QuadraticAlgebra a = table1(c.row, c.params);
    const std::string text = algebra_to_json(a).dump(2);
    const AlgebraFile back = parse_algebra_json(text);
    EXPECT_EQ(algebra_to_json(back.algebra).dump(2), text) << c.label;

    const VerdictReport r = verdict(back.algebra);
    EXPECT_EQ(r.classification.type, c.type) << c.label;
    EXPECT_EQ(r.sigma_norm.order, expected_norm(c)) << c.label;
    // The parsed algebra lives over a freshly declared field, so E is compared
    // as text against the original, and the original against the printed E.
    const PointScheme e = point_scheme(back.algebra);
    const PointScheme orig = point_scheme(a);
    EXPECT_EQ(e.is_plane, c.plane) << c.label;
    EXPECT_EQ(e.cubic.to_string(), orig.cubic.to_string()) << c.label;
    // WL is printed with a different cubic; the other rows match as printed.
    if (!c.plane && c.row != Table1Row::WL) EXPECT_TRUE(proportional(orig.cubic, c.printed_e)) << c.label;
  }
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_algebra_json("{"), InputError);
  EXPECT_THROW(parse_algebra_json("[]"), InputError);
  EXPECT_THROW(parse_algebra_json(R"({"relations": ["x*y"]})"), InputError);
  EXPECT_THROW(parse_algebra_json(R"({"relations": ["x*y", "y*z", 3]})"), InputError);
  EXPECT_THROW(parse_algebra_json(R"({"field": "w", "relations": ["x*y", "y*z", "z*x"]})"), InputError);
  EXPECT_THROW(read_algebra_file("/nonexistent/algebra.json"), InputError);
  const std::string err = error_json("input", "bad \"thing\"\nhere");
  EXPECT_EQ(err.find('\n'), std::string::npos);
  EXPECT_EQ(Json::parse(err)["error"]["kind"], "input");
}

TEST(Io, ReportShape) {
  const Json j = to_json(verdict(table1(Table1Row::NC, alpha(Scalar(2)))));
  EXPECT_EQ(j["type"], "NC");
  EXPECT_EQ(j["proj_finite_over_center"], false);
  EXPECT_EQ(j["sigma_norm"]["result"], "CertifiedInfinite");
  EXPECT_EQ(j["sigma_norm"]["reason"], to_string(InfinityReason::NonRootOfUnity));
  EXPECT_EQ(j["second_hessian_zero"], false);
  EXPECT_TRUE(j["citations"].is_array());

  const Json p = to_json(verdict(table1(Table1Row::P, alpha(omega()))));
  EXPECT_EQ(p["point_scheme"], "P2");
  EXPECT_EQ(p["second_hessian_zero"], "not-applicable");
  EXPECT_EQ(p["sigma_norm"]["value"], 1);
}
