#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/number_field.hpp"
#include "qplane/ternary_form.hpp"

namespace qplane {

// Symbols an expression may mention: noncommuting variables (by index) and
// named scalar constants such as a field generator.
struct ParseContext {
  std::vector<std::string> variables;
  std::map<std::string, Scalar> constants;
};

using Word = std::vector<int>;
using NCPoly = std::map<Word, Scalar>;  // noncommutative polynomial, zero terms removed

// Grammar: sums and differences of products; factors are numbers, symbols,
// parenthesized expressions, each optionally raised to a nonnegative integer
// power. Division is allowed only by scalar subexpressions. Multiplication
// must be written with '*'. Throws InputError on any syntax problem.
NCPoly parse_nc_polynomial(std::string_view text, const ParseContext& ctx);

// An expression with no variables.
Scalar parse_scalar(std::string_view text, const ParseContext& ctx);

// A homogeneous commutative expression in x, y, z.
TernaryForm parse_form(std::string_view text, const ParseContext& ctx = {});

// A univariate rational polynomial in `var`.
UPolyQ parse_upoly(std::string_view text, const std::string& var);

// The field declared as {"generator": g, "min_poly": m}; a degree-1 min_poly
// collapses to Q with the generator bound to its rational root.
struct DeclaredField {
  FieldPtr field;
  std::string generator;
  Scalar generator_value;
};
DeclaredField declare_field(const std::string& generator, const std::string& min_poly);

// Context with x, y, z as variables plus the declared generator (if any).
ParseContext xyz_context(const DeclaredField* field = nullptr);

}  // namespace qplane
