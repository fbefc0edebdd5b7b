#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qplane/expr.hpp"
#include "qplane/ternary_form.hpp"

namespace qplane {

// c[i][j] is the coefficient of the word x_i x_j, with (x_0, x_1, x_2) = (x, y, z).
using RelationTensor = std::array<std::array<Scalar, 3>, 3>;

// A = k<x,y,z>/(f_1, f_2, f_3) for three linearly independent quadratic relations.
class QuadraticAlgebra {
 public:
  explicit QuadraticAlgebra(std::array<RelationTensor, 3> relations);

  // Relations such as "y*z - 2*z*y"; `field` supplies the generator symbol.
  static QuadraticAlgebra from_strings(const std::array<std::string, 3>& relations,
                                       const DeclaredField* field = nullptr);

  const RelationTensor& relation(int k) const { return rel_[static_cast<std::size_t>(k)]; }
  FieldPtr field() const;

  // f_k(p, q) = sum_{i,j} c_ij p_i q_j.
  Scalar evaluate(int k, const Vec3& p, const Vec3& q) const;
  std::string relation_string(int k) const;

 private:
  std::array<RelationTensor, 3> rel_;
};

// M(p) as linear forms in p: row k, column j holds sum_i c^k_ij p_i, so that
// f_k(p, q) = (M(p) q)_k.
using MultilinearMatrix = std::array<std::array<LinearForm, 3>, 3>;

MultilinearMatrix multilinearize(const QuadraticAlgebra& a);
Mat3 evaluate(const MultilinearMatrix& m, const Vec3& p);

struct PointScheme {
  bool is_plane = false;  // det M vanishes identically
  TernaryForm cubic;      // normalized det M(p) when !is_plane
};

PointScheme point_scheme(const QuadraticAlgebra& a);

// sigma(p) as the kernel of M(p) when rank M(p) = 2, nullopt when the rank is
// at most 1. Throws InputError when p is off the point scheme.
std::optional<ProjPoint> sigma_eval(const QuadraticAlgebra& a, const ProjPoint& p);

// Same, with the point scheme already computed.
std::optional<ProjPoint> sigma_eval(const QuadraticAlgebra& a, const PointScheme& e, const ProjPoint& p);

// sigma^{-1}(q): the p with f_k(p, q) = 0 for all k, when unique.
std::optional<ProjPoint> sigma_inverse_eval(const QuadraticAlgebra& a, const ProjPoint& q);

struct GraphWitness {
  ProjPoint point;
  std::optional<ProjPoint> image;
  std::array<Scalar, 3> values;  // f_k(p, sigma(p)); zero when image is absent
};

struct GraphCheck {
  bool holds = true;
  std::vector<GraphWitness> witnesses;
};

// Pointwise graph condition f_k(p, sigma(p)) = 0 on each sample.
GraphCheck verify_g1_graph(const QuadraticAlgebra& a, const std::vector<ProjPoint>& samples);

struct SymbolicGraphCheck {
  bool holds = true;
  std::array<TernaryForm, 3> products;    // f_k(p, sigma(p)) as forms in p = (x, y, z)
  std::array<TernaryForm, 3> quotients;   // products[k] = quotients[k] * g + remainders[k]
  std::array<TernaryForm, 3> remainders;
};

// Symbolic graph condition: sigma is given by forms of a common degree in a
// generic point (x, y, z); each f_k(p, sigma(p)) must reduce to zero modulo g.
SymbolicGraphCheck verify_g1_symbolic(const QuadraticAlgebra& a, const TernaryForm& g,
                                      const std::array<TernaryForm, 3>& sigma);

}  // namespace qplane
