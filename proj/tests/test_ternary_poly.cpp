#include <gtest/gtest.h>

#include <random>

#include "qplane/expr.hpp"
#include "qplane/ternary_form.hpp"

using namespace qplane;

namespace {

TernaryForm F(const char* s) { return parse_form(s); }

// Oracle for the Hessian: cofactor expansion written out by hand with the
// Leibniz formula over all six permutations.
TernaryForm leibniz_hessian(const TernaryForm& f) {
  TernaryForm h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  TernaryForm det(3 * (f.degree() - 2));
  for (int p = 0; p < 6; ++p) {
    TernaryForm term = h[0][perms[p][0]] * h[1][perms[p][1]] * h[2][perms[p][2]];
    det += p < 3 ? term : -term;
  }
  return det;
}

TernaryForm random_cubic(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  TernaryForm f(3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) f.add_term({a, b, 3 - a - b}, Scalar(d(rng)));
  return f;
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

}  // namespace

TEST(Parse, FormsAndErrors) {
  const TernaryForm f = F("x^3 - y^2*z");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.to_string(), "x^3 - y^2*z");
  EXPECT_EQ(F("-(1/3)*x*y + 2*z^2").to_string(), "-1/3*x*y + 2*z^2");
  EXPECT_THROW(F("x^2 + y"), InputError);
  EXPECT_THROW(F("2x"), InputError);
  EXPECT_THROW(F("x + w"), InputError);
  EXPECT_THROW(F("x / y"), InputError);
}

TEST(Parse, GeneratorCoefficients) {
  const auto field = declare_field("t", "t^2+t+1");
  const TernaryForm f = parse_form("(t-1)*x*y*z", xyz_context(&field));
  EXPECT_EQ(f.to_string(), "(t - 1)*x*y*z");
  EXPECT_EQ(f.coeff({1, 1, 1}).pow(2), (Scalar::generator(field.field) - Scalar(1)).pow(2));
}

TEST(Hessian, SpecExamples) {
  EXPECT_TRUE(hessian(F("x^3")).is_zero());
  EXPECT_TRUE(hessian(F("x^2*y")).is_zero());
  EXPECT_EQ(hessian(F("x*y*z")), F("2*x*y*z"));
  EXPECT_EQ(hessian(F("x^3 - y^2*z")), F("-24*x*y^2"));
  EXPECT_THROW(hessian(F("x + y")), InputError);
}

TEST(Hessian, MatchesLeibnizOracleOnRandomCubics) {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    const TernaryForm f = random_cubic(rng);
    EXPECT_EQ(hessian(f), leibniz_hessian(f));
  }
}

TEST(Hessian, ScalingAndCovariance) {
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const TernaryForm f = random_cubic(rng);
    const Scalar c(Rational(-3, 2));
    EXPECT_EQ(hessian(f.scaled(c)), hessian(f).scaled(c.pow(3)));
    const Mat3 t = random_invertible(rng);
    const Scalar det = determinant(t);
    EXPECT_EQ(hessian(f.compose(t)), hessian(f).compose(t).scaled(det * det));
  }
}

TEST(SecondHessian, SpecExamples) {
  EXPECT_TRUE(second_hessian_is_zero(F("x^3 - y^2*z")));
  EXPECT_FALSE(second_hessian_is_zero(F("x*y*z")));
  EXPECT_TRUE(second_hessian_is_zero(F("x^3")));
  EXPECT_EQ(hessian(F("2*x*y*z")), F("16*x*y*z"));
  EXPECT_THROW(second_hessian_is_zero(F("x^2")), InputError);
}

TEST(DivideByLinear, SpecExamples) {
  EXPECT_EQ(*divide_by_linear(F("x^2*y"), {1, 0, 0}), F("x*y"));
  EXPECT_EQ(*divide_by_linear(F("y*(x^2 - y*z)"), {0, 1, 0}), F("x^2 - y*z"));
  EXPECT_FALSE(divide_by_linear(F("x^3 - y^2*z"), {1, 0, 0}).has_value());
  EXPECT_THROW(divide_by_linear(F("x^3"), {0, 0, 0}), InputError);
}

TEST(DivideByLinear, RecoversQuotient) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 20; ++i) {
    LinearForm l{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
    if (l.is_zero()) continue;
    TernaryForm q(2);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) q.add_term({a, b, 2 - a - b}, Scalar(d(rng)));
    const TernaryForm f = TernaryForm::from_linear(l) * q;
    const auto back = divide_by_linear(f, l);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, q);
  }
}

TEST(Radical, SpecExamples) {
  auto r = squarefree_radical(F("x^3"));
  EXPECT_EQ(r.radical, F("x"));
  EXPECT_FALSE(r.is_reduced);
  r = squarefree_radical(F("x^2*y"));
  EXPECT_EQ(r.radical, F("x*y"));
  EXPECT_FALSE(r.is_reduced);
  r = squarefree_radical(F("x*y*z"));
  EXPECT_EQ(r.radical, F("x*y*z"));
  EXPECT_TRUE(r.is_reduced);
  EXPECT_THROW(squarefree_radical(TernaryForm(3)), InputError);
}

TEST(Radical, PowerDivisibleByForm) {
  const char* corpus[] = {"x^3", "x^2*y", "x*y*z", "y*(x^2 - y*z)", "x^3 - y^2*z", "(x + y)^2*(x - 2*z)",
                          "(x - y + z)^3", "x^3 + y^3 + z^3 - x*y*z"};
  for (const char* s : corpus) {
    const TernaryForm f = F(s);
    const auto r = squarefree_radical(f);
    EXPECT_TRUE(divide_exact(r.radical.pow(f.degree()), f).has_value()) << s;
  }
}

TEST(Gcd, CommonFactors) {
  EXPECT_EQ(gcd(F("(x - y)*(x + z)"), F("(x - y)*(y + 2*z)")), F("x - y"));
  EXPECT_EQ(gcd(F("z^2*(x + y)"), F("z*(x + y)^2")), F("x*z + y*z"));
  EXPECT_EQ(gcd(F("x^2 + y^2 + z^2"), F("x*y")).degree(), 0);
}

TEST(Evaluate, SpecExamplesAndScaling) {
  EXPECT_TRUE(F("x^3 - y^2*z").evaluate(Vec3{0, 0, 1}).is_zero());
  EXPECT_EQ(F("x*y*z").evaluate(Vec3{1, 1, 1}), Scalar(1));
  EXPECT_TRUE(F("x^3 + y^3 + z^3 - x*y*z").evaluate(Vec3{1, -1, 0}).is_zero());
  const TernaryForm f = F("x^3 + 2*x*y*z - 5*z^3 + y^2*x");
  const Vec3 p{2, -1, 3};
  const Scalar c(7);
  EXPECT_EQ(f.evaluate(scale(p, c)), f.evaluate(p) * c.pow(3));
  EXPECT_THROW(ProjPoint(0, 0, 0), InputError);
}
