#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qplane/hesse_curve.hpp"
#include "qplane/verdict.hpp"

namespace qplane {

using Json = nlohmann::ordered_json;

// {"field": {"generator": "w", "min_poly": "w^2 + w + 1"} | null,
//  "relations": ["y*z - 2*z*y", "z*x - 2*x*z", "x*y - 2*y*x"]}
struct AlgebraFile {
  QuadraticAlgebra algebra;
  std::optional<DeclaredField> field;
};

AlgebraFile parse_algebra_json(const std::string& text);  // throws InputError
AlgebraFile read_algebra_file(const std::string& path);
// Round-trips through parse_algebra_json. The generator name and minimal
// polynomial come from the algebra's own field.
Json algebra_to_json(const QuadraticAlgebra& a);

Json to_json(const OrderResult& r);
Json to_json(const ProjPoint& p);
Json to_json(const Mat3& m);
Json to_json(const NormResult& r);
Json to_json(const SigmaOrderResult& r);
Json to_json(const CubicClassification& c);
Json to_json(const VerdictReport& r);
Json to_json(Tri t);  // true / false / "unknown"

// One line, for stderr: {"error": {"kind": ..., "message": ...}}.
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace qplane
