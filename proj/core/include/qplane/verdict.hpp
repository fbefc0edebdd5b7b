#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplane/order_engine.hpp"

namespace qplane {

enum class Tri { True, False, Unknown };
std::string to_string(Tri t);  // "true", "false", "unknown"

struct VerdictReport {
  CubicClassification classification;  // type P carries an empty cubic
  NormResult sigma_norm;
  SigmaOrderResult sigma_order;
  Tri has_fat_point = Tri::Unknown;
  Tri proj_finite_over_center = Tri::Unknown;
  Tri algebra_finite_over_center = Tri::Unknown;
  std::optional<bool> second_hessian_zero;  // nullopt when E is the whole plane
  std::string beilinson_parameterization;
  std::vector<std::string> citations;  // rule identifiers, in the order used
  bool assumed_regular = true;         // AS-regularity is taken on trust

  bool is_plane() const { return classification.type == CubicType::P; }
};

// point scheme -> classification -> ||sigma|| and |sigma| -> verdicts. A
// failure is rethrown with the stage prefixed to its message, keeping the
// exception type.
VerdictReport verdict(const QuadraticAlgebra& a, const OrderCaps& caps = {});

}  // namespace qplane
