#pragma once

#include <utility>
#include <vector>

#include "qplane/poly.hpp"

namespace qplane {

struct FactorizationQ {
  Rational unit;                                // leading coefficient of the input
  std::vector<std::pair<UPolyQ, int>> factors;  // monic irreducibles with multiplicity
};

// Complete factorization over Q: squarefree decomposition, then Zassenhaus
// (modular factorization, Hensel lifting, subset recombination) on each
// squarefree part. Factors are sorted by degree, then coefficients.
FactorizationQ factor(const UPolyQ& f);

// Monic irreducible factors of a squarefree polynomial of degree >= 1.
std::vector<UPolyQ> factor_squarefree(const UPolyQ& f);

bool is_irreducible(const UPolyQ& f);

}  // namespace qplane
