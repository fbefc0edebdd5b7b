#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplane/cubic_classify.hpp"
#include "qplane/quantum_algebra.hpp"

namespace qplane {

// The twelve standard families of 3-dimensional Calabi-Yau quantum
// polynomial algebras, one per geometric type (two each for S and T).
enum class Table1Row { P, S1, S3, SPrime, T1, T3, TPrime, NC, CC, TL, WL, EC };

std::string to_string(Table1Row r);  // "P", "S1", "S3", "S'", "T1", "T3", "T'", ...
Table1Row parse_table1_row(const std::string& s);
const std::vector<Table1Row>& all_table1_rows();
CubicType row_type(Table1Row r);

struct Table1Params {
  std::optional<Scalar> alpha;    // P, S1, S3, S', NC, TL
  std::optional<Vec3> ec_point;   // EC: p = (alpha, beta, gamma)
};

// Throws InputError when the parameters do not fit the row.
QuadraticAlgebra table1(Table1Row row, const Table1Params& params = {});

// lambda = (a^3 + b^3 + c^3) / (a b c) for the EC row point (a, b, c).
Scalar ec_row_lambda(const Vec3& p);

}  // namespace qplane
