#include "qplane/table1.hpp"

#include <array>

#include "qplane/expr.hpp"
#include "qplane/hesse_curve.hpp"

namespace qplane {
namespace {

struct RowInfo {
  Table1Row row;
  const char* name;
  CubicType type;
  std::array<const char*, 3> relations;  // in x, y, z with parameters a, b, c
};

const std::array<RowInfo, 12>& rows() {
  static const std::array<RowInfo, 12> r{{
      {Table1Row::P, "P", CubicType::P, {"y*z - a*z*y", "z*x - a*x*z", "x*y - a*y*x"}},
      {Table1Row::S1, "S1", CubicType::S, {"y*z - a*z*y", "z*x - a*x*z", "x*y - a*y*x"}},
      {Table1Row::S3, "S3", CubicType::S, {"z*y - a*x^2", "x*z - a*y^2", "y*x - a*z^2"}},
      {Table1Row::SPrime, "S'", CubicType::SPrime, {"y*z - a*z*y + x^2", "z*x - a*x*z", "x*y - a*y*x"}},
      {Table1Row::T1, "T1", CubicType::T,
       {"y*z - z*y + x*y + y*x - y^2", "z*x - x*z + x^2 - y*x - x*y", "x*y - y*x"}},
      {Table1Row::T3, "T3", CubicType::T,
       {"y*z - x*y - y*x + y^2 - x*z - z*x + x^2", "z*x - x^2 + x*y + y*x - z*y - y*z - y^2", "x*y - x^2 - y^2"}},
      {Table1Row::TPrime, "T'", CubicType::TPrime,
       {"y*z - z*y + x*y + y*x", "z*x - x*z + x^2 - y*z - z*y + y^2", "x*y - y*x - y^2"}},
      {Table1Row::NC, "NC", CubicType::NC, {"y*z - a*z*y + x^2", "z*x - a*x*z + y^2", "x*y - a*y*x"}},
      {Table1Row::CC, "CC", CubicType::CC,
       {"y*z - z*y + y^2 + 3*x^2", "z*x - x*z + y*x + x*y - y*z - z*y", "x*y - y*x - y^2"}},
      {Table1Row::TL, "TL", CubicType::TL, {"y*z - a*z*y - x^2", "z*x - a*x*z", "x*y - a*y*x"}},
      {Table1Row::WL, "WL", CubicType::WL,
       {"y*z - z*y - (1/3)*y^2", "z*x - x*z - (1/3)*(y*x + x*y)", "x*y - y*x"}},
      {Table1Row::EC, "EC", CubicType::EC, {"a*y*z + b*z*y + c*x^2", "a*z*x + b*x*z + c*y^2", "a*x*y + b*y*x + c*z^2"}},
  }};
  return r;
}

const RowInfo& info(Table1Row r) { return rows()[static_cast<std::size_t>(r)]; }

enum class Needs { CubeRootOfUnity, GenericAlpha, Nothing, Point };

Needs needs(Table1Row r) {
  switch (r) {
    case Table1Row::P:
    case Table1Row::TL: return Needs::CubeRootOfUnity;
    case Table1Row::S1:
    case Table1Row::S3:
    case Table1Row::SPrime:
    case Table1Row::NC: return Needs::GenericAlpha;
    case Table1Row::EC: return Needs::Point;
    default: return Needs::Nothing;
  }
}

}  // namespace

std::string to_string(Table1Row r) { return info(r).name; }

Table1Row parse_table1_row(const std::string& s) {
  for (const auto& r : rows())
    if (s == r.name) return r.row;
  std::string names;
  for (const auto& r : rows()) names += std::string(names.empty() ? "" : ", ") + r.name;
  throw InputError("unknown row '" + s + "' (expected one of " + names + ")");
}

const std::vector<Table1Row>& all_table1_rows() {
  static const std::vector<Table1Row> all = [] {
    std::vector<Table1Row> v;
    for (const auto& r : rows()) v.push_back(r.row);
    return v;
  }();
  return all;
}

CubicType row_type(Table1Row r) { return info(r).type; }

Scalar ec_row_lambda(const Vec3& p) {
  const Scalar prod = p[0] * p[1] * p[2];
  if (prod.is_zero()) throw InputError("lambda is undefined when a coordinate of p vanishes");
  return (p[0].pow(3) + p[1].pow(3) + p[2].pow(3)) / prod;
}

QuadraticAlgebra table1(Table1Row row, const Table1Params& params) {
  const std::string name = to_string(row);
  ParseContext ctx = xyz_context();
  switch (needs(row)) {
    case Needs::CubeRootOfUnity:
    case Needs::GenericAlpha: {
      if (params.ec_point) throw InputError("row " + name + " takes no point parameter");
      if (!params.alpha) throw InputError("row " + name + " needs alpha");
      const Scalar& a = *params.alpha;
      const bool unit_cube = a.pow(3).is_one();
      if (needs(row) == Needs::CubeRootOfUnity && !unit_cube)
        throw InputError("row " + name + " needs alpha^3 = 1, got alpha = " + a.to_string());
      if (needs(row) == Needs::GenericAlpha && (a.is_zero() || unit_cube))
        throw InputError("row " + name + " needs alpha^3 not in {0, 1}, got alpha = " + a.to_string());
      ctx.constants["a"] = a;
      break;
    }
    case Needs::Nothing:
      if (params.alpha || params.ec_point) throw InputError("row " + name + " takes no parameters");
      break;
    case Needs::Point: {
      if (params.alpha) throw InputError("row EC takes a point, not alpha");
      if (!params.ec_point) throw InputError("row EC needs a point p = (alpha, beta, gamma)");
      const Vec3& p = *params.ec_point;
      const ProjPoint pp(p);
      if ((p[0] * p[1] * p[2]).is_zero()) {
        // Every point of a Hesse curve with a zero coordinate is a flex.
        const std::string which = pp == ProjPoint(Scalar(1), Scalar(-1), Scalar(0)) ? " (p = o)" : "";
        throw InputError("p = " + pp.to_string() + which +
                         " has a zero coordinate, so lambda is undefined and p lies in E[3]");
      }
      const Scalar lambda = ec_row_lambda(p);
      const auto curve = HesseCurve::create(lambda);
      if (translation_is_linear(HessePoint(curve, pp)))
        throw InputError("p = " + pp.to_string() + " lies in E[3]");
      ctx.constants["a"] = p[0];
      ctx.constants["b"] = p[1];
      ctx.constants["c"] = p[2];
      break;
    }
  }
  std::array<RelationTensor, 3> rel;
  for (int k = 0; k < 3; ++k) {
    for (auto& r : rel[k]) r.fill(Scalar(0));
    for (const auto& [word, c] : parse_nc_polynomial(info(row).relations[k], ctx)) rel[k][word[0]][word[1]] = c;
  }
  return QuadraticAlgebra(rel);
}

}  // namespace qplane
