#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qplane/number_field.hpp"

namespace qplane {

// Monic irreducible factors over `field` with multiplicities, sorted by degree.
// Reduces to factorization over Q through the norm of a shifted polynomial.
std::vector<std::pair<KPoly, int>> factor_over(const FieldPtr& field, const KPoly& p);

// Rational polynomial N(X) = Norm_{K/Q} p(X) for p with coefficients in K.
UPolyQ norm_poly(const FieldPtr& field, const KPoly& p);

struct Adjunction {
  FieldPtr field;  // contains the input field; Scalar::in embeds old elements
  Scalar root;     // p(root) = 0
};

// A field in which p has a root, plus that root. When p already has a root in
// `field` the field is returned unchanged. Otherwise a root of the lowest
// degree irreducible factor is adjoined and the tower is flattened to one
// primitive element. Throws DegreeCapExceeded past max_degree.
Adjunction adjoin_root(const FieldPtr& field, const KPoly& p, int max_degree = kDefaultMaxFieldDegree);

struct Splitting {
  FieldPtr field;
  std::vector<Scalar> roots;  // distinct roots, in order of discovery
};

// Extends until p splits into linear factors and returns its distinct roots.
Splitting split_completely(const FieldPtr& field, const KPoly& p, int max_degree = kDefaultMaxFieldDegree);

// Roots of p that already lie in `field`.
std::vector<Scalar> roots_in(const FieldPtr& field, const KPoly& p);

}  // namespace qplane
