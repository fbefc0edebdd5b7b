#include "qplane/io.hpp"

#include <fstream>
#include <sstream>

namespace qplane {
namespace {

std::string field_string(const FieldPtr& f) {
  return f ? "Q(" + f->generator() + ") with " + to_string(f->min_poly(), f->generator()) + " = 0" : "Q";
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  std::optional<DeclaredField> field;
  if (j.contains("field") && !j["field"].is_null()) {
    const Json& f = j["field"];
    if (!f.is_object() || !f.contains("generator") || !f.contains("min_poly") || !f["generator"].is_string() ||
        !f["min_poly"].is_string())
      throw InputError("\"field\" must be {\"generator\": string, \"min_poly\": string}");
    field = declare_field(f["generator"].get<std::string>(), f["min_poly"].get<std::string>());
  }
  if (!j.contains("relations") || !j["relations"].is_array() || j["relations"].size() != 3)
    throw InputError("\"relations\" must be an array of three strings");
  std::array<std::string, 3> rel;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!j["relations"][k].is_string()) throw InputError("\"relations\" must be an array of three strings");
    rel[k] = j["relations"][k].get<std::string>();
  }
  return {QuadraticAlgebra::from_strings(rel, field ? &*field : nullptr), field};
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str());
}

Json algebra_to_json(const QuadraticAlgebra& a) {
  Json j;
  const FieldPtr f = a.field();
  if (f) j["field"] = {{"generator", f->generator()}, {"min_poly", to_string(f->min_poly(), f->generator())}};
  else j["field"] = nullptr;
  j["relations"] = Json::array({a.relation_string(0), a.relation_string(1), a.relation_string(2)});
  return j;
}

Json to_json(const OrderResult& r) {
  Json j;
  switch (r.kind) {
    case OrderResult::Kind::Exact:
      j["result"] = "Exact";
      j["value"] = r.value;
      break;
    case OrderResult::Kind::CertifiedInfinite:
      j["result"] = "CertifiedInfinite";
      j["reason"] = to_string(r.reason);
      break;
    case OrderResult::Kind::Unknown:
      j["result"] = "Unknown";
      j["cap"] = r.value;
      break;
  }
  j["display"] = to_string(r);
  return j;
}

Json to_json(const ProjPoint& p) {
  return Json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
}

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const NormResult& r) {
  Json j = to_json(r.order);
  j["rule"] = r.rule;
  j["fit_exponents_tried"] = r.tried;
  if (r.witness) j["witness"] = to_json(r.witness->matrix());
  return j;
}

Json to_json(const SigmaOrderResult& r) {
  Json j = to_json(r.order);
  j["rule"] = r.rule;
  return j;
}

Json to_json(const CubicClassification& c) {
  Json j;
  j["type"] = to_string(c.type);
  if (c.type == CubicType::P) {
    j["point_scheme"] = "P2";
    return j;
  }
  j["point_scheme"] = c.cubic.to_string();
  j["field"] = field_string(c.cubic.field());
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json cj;
    cj["equation"] = comp.equation.to_string();
    cj["kind"] = to_string(comp.kind);
    cj["multiplicity"] = comp.multiplicity;
    cj["field"] = field_string(comp.equation.field());
    if (comp.parametrization) cj["parametrization"] = comp.parametrization->to_string();
    comps.push_back(cj);
  }
  j["components"] = comps;
  Json sing = Json::array();
  for (const auto& sp : c.singular_points) {
    Json sj;
    sj["point"] = to_json(sp.point);
    sj["field"] = field_string(sp.point.field());
    sj["multiplicity"] = sp.multiplicity;
    sj["tangent_cone"] = to_string(sp.cone);
    Json lines = Json::array();
    for (const auto& l : sp.tangent_lines) lines.push_back(l.to_string());
    sj["tangent_lines"] = lines;
    sing.push_back(sj);
  }
  j["singular_points"] = sing;
  if (c.hesse_lambda) j["hesse_lambda"] = c.hesse_lambda->to_string();
  return j;
}

Json to_json(Tri t) {
  if (t == Tri::Unknown) return "unknown";
  return t == Tri::True;
}

Json to_json(const VerdictReport& r) {
  Json j;
  j["type"] = to_string(r.classification.type);
  j["point_scheme"] = r.is_plane() ? "P2" : r.classification.cubic.to_string();
  j["assumed_regular"] = r.assumed_regular;
  j["sigma_norm"] = to_json(r.sigma_norm);
  j["sigma_order"] = to_json(r.sigma_order);
  j["has_fat_point"] = to_json(r.has_fat_point);
  j["proj_finite_over_center"] = to_json(r.proj_finite_over_center);
  j["algebra_finite_over_center"] = to_json(r.algebra_finite_over_center);
  if (r.second_hessian_zero) j["second_hessian_zero"] = *r.second_hessian_zero;
  else j["second_hessian_zero"] = "not-applicable";
  j["beilinson_parameterization"] = r.beilinson_parameterization;
  j["citations"] = r.citations;
  j["classification"] = to_json(r.classification);
  return j;
}

std::string error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j.dump();
}

}  // namespace qplane
