#pragma once

// Test-side description of the twelve standard families: the printed point
// scheme and the printed automorphism on each component, written out by hand
// and deliberately independent of the library's own parametrizations.

#include <functional>
#include <string>
#include <vector>

#include "qplane/expr.hpp"
#include "qplane/hesse_curve.hpp"
#include "qplane/table1.hpp"
#include "support/hesse_points.hpp"

namespace qplane::testing {

inline const DeclaredField& omega_field() {
  static const DeclaredField f = declare_field("w", "w^2 + w + 1");
  return f;
}
inline const DeclaredField& zeta6_field() {
  static const DeclaredField f = declare_field("u", "u^2 - u + 1");
  return f;
}
// The 2-torsion point s = (r, r, 1) of the lambda = 1 curve: 2 r^3 - r^2 + 1 = 0.
inline const DeclaredField& two_torsion_field() {
  static const DeclaredField f = declare_field("r", "r^3 - 1/2*r^2 + 1/2");
  return f;
}
inline Scalar omega() { return omega_field().generator_value; }
inline Scalar zeta6() { return zeta6_field().generator_value; }
inline Vec3 two_torsion_s() {
  const Scalar r = two_torsion_field().generator_value;
  return {r, r, Scalar(1)};
}

struct RefComponent {
  std::string name;
  std::vector<Vec3> samples;               // smooth points of E on this component
  std::function<Vec3(const Vec3&)> sigma;  // printed formula, denominators cleared
};

struct RefCase {
  std::string label;  // "S1 alpha=2"
  Table1Row row;
  Table1Params params;
  bool plane = false;
  TernaryForm printed_e;  // as printed; unused when plane
  CubicType type;
  std::vector<RefComponent> components;  // empty for TL and WL
};

namespace detail {

inline TernaryForm form(const std::string& text, const Scalar& lambda = Scalar(0)) {
  ParseContext ctx = xyz_context();
  ctx.constants["l"] = lambda;
  return parse_form(text, ctx);
}

inline std::vector<Vec3> along(std::size_t n, const std::function<Vec3(const Scalar&)>& curve) {
  std::vector<Vec3> out;
  for (long t = 1; out.size() < n; ++t) {
    out.push_back(curve(Scalar(t)));
    if (out.size() < n) out.push_back(curve(Scalar(-t) / Scalar(t + 1)));
  }
  return out;
}

// p + q on x^3 + y^3 + z^3 - l x y z with identity (1, -1, 0): restrict the
// cubic to the chord q + s p, drop the known roots s = 0 and s = infinity,
// and reflect the residual point.
inline Vec3 chord_sum(const TernaryForm& g, const Vec3& p, const Vec3& q) {
  auto on = [&](long s) { return g.evaluate(q + scale(p, Scalar(s))); };
  // g(q + s p) = c1 s + c2 s^2 since c0 = g(q) = 0 and c3 = g(p) = 0.
  const Scalar v1 = on(1), v2 = on(2);
  const Scalar c2 = (v2 - Scalar(2) * v1) / Scalar(2);
  const Scalar c1 = v1 - c2;
  if (c2.is_zero()) return {p[1], p[0], p[2]};  // the chord is tangent at p
  const Vec3 r = q + scale(p, -c1 / c2);
  return {r[1], r[0], r[2]};
}

}  // namespace detail

inline std::vector<RefCase> reference_cases(std::size_t n = 20) {
  using detail::along;
  using detail::form;
  std::vector<RefCase> out;
  const Scalar one(1), zero(0);

  {
    const Scalar a = omega();
    RefCase c{"P alpha=w", Table1Row::P, {a, {}}, true, TernaryForm(), CubicType::P, {}};
    c.components.push_back({"P2", along(n, [](const Scalar& t) { return Vec3{Scalar(1), t, t * t + Scalar(3)}; }),
                            [a](const Vec3& p) { return Vec3{p[0], a * p[1], a * a * p[2]}; }});
    out.push_back(c);
  }

  for (const Scalar& a : {zeta6(), Scalar(2)}) {
    const std::string tag = a.is_rational() ? "alpha=2" : "alpha=u";
    const Scalar lambda = (a.pow(3) - one) / a;

    RefCase s1{"S1 " + tag, Table1Row::S1, {a, {}}, false, form("x*y*z"), CubicType::S, {}};
    s1.components = {
        {"V(x)", along(n, [&](const Scalar& t) { return Vec3{zero, one, t}; }),
         [a](const Vec3& p) { return Vec3{Scalar(0), p[1], a * p[2]}; }},
        {"V(y)", along(n, [&](const Scalar& t) { return Vec3{one, zero, t}; }),
         [a](const Vec3& p) { return Vec3{a * p[0], Scalar(0), p[2]}; }},
        {"V(z)", along(n, [&](const Scalar& t) { return Vec3{one, t, zero}; }),
         [a](const Vec3& p) { return Vec3{p[0], a * p[1], Scalar(0)}; }},
    };
    out.push_back(s1);

    RefCase s3{"S3 " + tag, Table1Row::S3, {a, {}}, false, form("x*y*z"), CubicType::S, {}};
    s3.components = {
        {"V(x)", along(n, [&](const Scalar& t) { return Vec3{zero, one, t}; }),
         [a](const Vec3& p) { return Vec3{a * p[2], Scalar(0), p[1]}; }},
        {"V(y)", along(n, [&](const Scalar& t) { return Vec3{one, zero, t}; }),
         [a](const Vec3& p) { return Vec3{p[2], a * p[0], Scalar(0)}; }},
        {"V(z)", along(n, [&](const Scalar& t) { return Vec3{one, t, zero}; }),
         [a](const Vec3& p) { return Vec3{Scalar(0), p[0], a * p[1]}; }},
    };
    out.push_back(s3);

    RefCase sp{"S' " + tag, Table1Row::SPrime, {a, {}}, false, form("x*(x^2 - l*y*z)", lambda), CubicType::SPrime, {}};
    sp.components = {
        {"V(x)", along(n, [&](const Scalar& t) { return Vec3{zero, one, t}; }),
         [a](const Vec3& p) { return Vec3{Scalar(0), p[1], a * p[2]}; }},
        {"V(x^2 - l*y*z)", along(n, [&](const Scalar& t) { return Vec3{lambda * t, lambda, t * t}; }),
         [a](const Vec3& p) { return Vec3{a * p[0], a * a * p[1], p[2]}; }},
    };
    out.push_back(sp);

    RefCase nc{"NC " + tag, Table1Row::NC, {a, {}}, false, form("x^3 + y^3 - l*x*y*z", lambda), CubicType::NC, {}};
    nc.components = {
        {"V(x^3 + y^3 - l*x*y*z)",
         along(n, [&](const Scalar& t) { return Vec3{lambda * t, lambda * t * t, one + t.pow(3)}; }),
         [a](const Vec3& p) {
           return Vec3{p[0] * p[1], a * p[1] * p[1], -p[0] * p[0] + a * a * p[1] * p[2]};
         }},
    };
    out.push_back(nc);
  }

  {
    RefCase c{"T1", Table1Row::T1, {}, false, form("x*y*(x - y)"), CubicType::T, {}};
    c.components = {
        {"V(x)", along(n, [&](const Scalar& t) { return Vec3{zero, one, t}; }),
         [](const Vec3& p) { return Vec3{Scalar(0), p[1], p[1] + p[2]}; }},
        {"V(y)", along(n, [&](const Scalar& t) { return Vec3{one, zero, t}; }),
         [](const Vec3& p) { return Vec3{p[0], Scalar(0), p[0] + p[2]}; }},
        {"V(x - y)", along(n, [&](const Scalar& t) { return Vec3{one, one, t}; }),
         [](const Vec3& p) { return Vec3{p[0], p[0], -p[0] + p[2]}; }},
    };
    out.push_back(c);
  }
  {
    RefCase c{"T3", Table1Row::T3, {}, false, form("x*y*(x - y)"), CubicType::T, {}};
    c.components = {
        {"V(x)", along(n, [&](const Scalar& t) { return Vec3{zero, one, t}; }),
         [](const Vec3& p) { return Vec3{p[1], Scalar(0), p[1] + p[2]}; }},
        {"V(y)", along(n, [&](const Scalar& t) { return Vec3{one, zero, t}; }),
         [](const Vec3& p) { return Vec3{p[0], p[0], -p[2]}; }},
        {"V(x - y)", along(n, [&](const Scalar& t) { return Vec3{one, one, t}; }),
         [](const Vec3& p) { return Vec3{Scalar(0), p[0], -p[2]}; }},
    };
    out.push_back(c);
  }
  {
    RefCase c{"T'", Table1Row::TPrime, {}, false, form("y*(x^2 - y*z)"), CubicType::TPrime, {}};
    c.components = {
        {"V(y)", along(n, [&](const Scalar& t) { return Vec3{one, zero, t}; }),
         [](const Vec3& p) { return Vec3{p[0], Scalar(0), p[0] + p[2]}; }},
        {"V(x^2 - y*z)", along(n, [&](const Scalar& t) { return Vec3{t, one, t * t}; }),
         [](const Vec3& p) {
           return Vec3{p[0] - p[1], p[1], Scalar(-2) * p[0] + p[1] + p[2]};
         }},
    };
    out.push_back(c);
  }
  {
    RefCase c{"CC", Table1Row::CC, {}, false, form("x^3 - y^2*z"), CubicType::CC, {}};
    c.components = {
        {"V(x^3 - y^2*z)", along(n, [&](const Scalar& t) { return Vec3{t, one, t.pow(3)}; }),
         [](const Vec3& p) {
           const Scalar &a = p[0], &b = p[1], &cc = p[2];
           return Vec3{a * b - b * b, b * b, Scalar(-3) * a * a + Scalar(3) * a * b - b * b + b * cc};
         }},
    };
    out.push_back(c);
  }
  out.push_back({"TL alpha=w", Table1Row::TL, {omega(), {}}, false, form("x^3"), CubicType::TL, {}});
  // Printed as V(x^2 y) in the table.
  out.push_back({"WL", Table1Row::WL, {}, false, form("x^2*y"), CubicType::WL, {}});
  {
    const Vec3 s = two_torsion_s();
    const Scalar lambda = ec_row_lambda(s);
    const TernaryForm g = form("x^3 + y^3 + z^3 - l*x*y*z", lambda);
    RefCase c{"EC p=s", Table1Row::EC, {{}, s}, false, g, CubicType::EC, {}};
    std::vector<Vec3> samples;
    for (const auto& q : point_pool(HesseCurve::create(lambda), n, two_torsion_field().field))
      samples.push_back(q.point().coords());
    c.components.push_back({"E", samples, [g, s](const Vec3& q) { return detail::chord_sum(g, s, q); }});
    out.push_back(c);
  }
  return out;
}

}  // namespace qplane::testing
