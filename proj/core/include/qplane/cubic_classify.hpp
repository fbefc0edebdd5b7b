#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qplane/ternary_form.hpp"

namespace qplane {

// Common zeros in P^2 of a list of forms, exact, with coordinates in
// extensions of the forms' field as needed. Throws InputError when the forms
// share a curve (infinitely many zeros). Points are deduplicated and sorted;
// coordinates that happen to be rational are lowered to Q.
std::vector<ProjPoint> common_zeros(const std::vector<TernaryForm>& forms,
                                    int max_degree = kDefaultMaxFieldDegree);

// Res_x(f(x, y, 1), g(x, y, 1)) as a polynomial in y, taken with the formal
// x-degrees of f and g.
KPoly affine_resultant_x(const TernaryForm& f, const TernaryForm& g);

// A point with every coordinate in Q represented over Q; otherwise unchanged.
ProjPoint lower_to_rationals(const ProjPoint& p);

enum class CubicType { P, S, SPrime, T, TPrime, NC, CC, TL, WL, EC };

std::string to_string(CubicType t);  // "P", "S", "S'", "T", "T'", ...
CubicType parse_cubic_type(const std::string& s);

// True for the types whose second Hessian vanishes and whose algebras are
// never finite over the center: T, T', CC, TL, WL.
bool is_second_hessian_type(CubicType t);

enum class TangentCone { DistinctPair, RepeatedLine, TripleLines };
std::string to_string(TangentCone c);

struct SingularPoint {
  ProjPoint point;
  int multiplicity = 2;
  TangentCone cone = TangentCone::DistinctPair;
  std::vector<LinearForm> tangent_lines;  // may live in an extension field
};

// A point on a rational curve is written as the binary parameter (u : w) with
// t = u / w; (1 : 0) is the point at infinity.
using BinaryParam = std::array<Scalar, 2>;

BinaryParam canonical(const BinaryParam& p);  // w = 1, or (1, 0)
inline BinaryParam finite_param(const Scalar& t) { return {t, Scalar(1)}; }
inline BinaryParam infinite_param() { return {Scalar(1), Scalar(0)}; }

// Coordinates are binary forms of one degree D in (u, w), stored as
// polynomials in t = u / w.
class Parametrization {
 public:
  enum class Kind { Line, Conic, SingularCubic };

  static Parametrization line(const LinearForm& l);
  // Projection from a point `base` on the conic.
  static Parametrization conic(const TernaryForm& q, const ProjPoint& base);
  // Lines through the double point `node` of an irreducible cubic.
  static Parametrization singular_cubic(const TernaryForm& g, const ProjPoint& node);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::array<KPoly, 3>& coords() const { return coords_; }

  ProjPoint at(const BinaryParam& p) const;
  ProjPoint at(const Scalar& t) const { return at(finite_param(t)); }

  // Inverse on the image. nullopt at the node of a singular cubic, where two
  // parameters meet.
  std::optional<BinaryParam> preimage(const ProjPoint& q) const;

  // The image satisfies `equation` identically in t.
  bool satisfies(const TernaryForm& equation) const;

  std::string to_string() const;  // "(t, t^2, 1)"

 private:
  Kind kind_ = Kind::Line;
  int degree_ = 1;
  std::array<KPoly, 3> coords_;
  Vec3 center_;                    // base point (conic) or node (cubic)
  int c_ = 0, a_ = 1, b_ = 2;      // chart indices around the center
  std::array<LinearForm, 2> dual_; // line: u and w coordinates of a point
  Vec3 tangent_param_;             // conic: (u, w, 0) parameter of the base point
};

enum class ComponentKind { Line, Conic, Cubic };
std::string to_string(ComponentKind k);

struct CurveComponent {
  TernaryForm equation;  // normalized, irreducible
  ComponentKind kind = ComponentKind::Line;
  int multiplicity = 1;
  std::optional<Parametrization> parametrization;
};

struct SingularLocus {
  bool is_curve = false;  // the partials share a factor
  std::vector<SingularPoint> points;
};

SingularLocus singular_locus(const TernaryForm& g, int max_degree = kDefaultMaxFieldDegree);

struct CubicClassification {
  CubicType type = CubicType::EC;
  TernaryForm cubic;  // normalized
  std::vector<CurveComponent> components;
  std::vector<SingularPoint> singular_points;
  std::optional<Scalar> hesse_lambda;  // EC given as x^3 + y^3 + z^3 - lambda*x*y*z
};

CubicClassification classify_cubic(const TernaryForm& g, int max_degree = kDefaultMaxFieldDegree);

// Nine flexes V(g, H(g)) of a smooth cubic. Throws InputError if g is singular.
std::vector<ProjPoint> inflection_points(const TernaryForm& g, int max_degree = kDefaultMaxFieldDegree);

// Third intersection of the line through p and q (the tangent when p == q)
// with the cubic g, when that line is not a component of g.
std::optional<ProjPoint> third_point(const TernaryForm& g, const ProjPoint& p, const ProjPoint& q);

}  // namespace qplane
