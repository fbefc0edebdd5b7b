#pragma once

#include <memory>
#include <vector>

#include "qplane/order_result.hpp"
#include "qplane/ternary_form.hpp"

namespace qplane {

// E: x^3 + y^3 + z^3 - lambda*x*y*z = 0 with lambda^3 != 27, group identity
// o = (1, -1, 0) and -(x, y, z) = (y, x, z).
class HesseCurve {
 public:
  static std::shared_ptr<const HesseCurve> create(const Scalar& lambda);

  const Scalar& lambda() const { return lambda_; }
  const TernaryForm& equation() const { return equation_; }
  bool contains(const ProjPoint& p) const { return equation_.evaluate(p).is_zero(); }

 private:
  explicit HesseCurve(const Scalar& lambda);
  Scalar lambda_;
  TernaryForm equation_;
};

using CurvePtr = std::shared_ptr<const HesseCurve>;

class HessePoint {
 public:
  HessePoint(CurvePtr curve, const ProjPoint& p);  // throws InputError off the curve

  static HessePoint identity(CurvePtr curve);

  const CurvePtr& curve() const { return curve_; }
  const ProjPoint& point() const { return p_; }
  bool is_identity() const;

  friend bool operator==(const HessePoint& a, const HessePoint& b) { return a.p_ == b.p_; }
  friend bool operator!=(const HessePoint& a, const HessePoint& b) { return !(a == b); }

 private:
  CurvePtr curve_;
  ProjPoint p_;
};

HessePoint ec_negate(const HessePoint& p);
HessePoint ec_add(const HessePoint& p, const HessePoint& q);
HessePoint ec_multiply(const HessePoint& p, long n);  // n may be negative

// Least n <= cap with n*p = o, else Unknown(cap). Never certifies infinity.
OrderResult point_order(const HessePoint& p, long cap);

// The nine points of E[3], sorted.
std::vector<HessePoint> three_torsion(const CurvePtr& curve);

// Translation by p is the restriction of a linear map exactly when 3p = o.
bool translation_is_linear(const HessePoint& p);

}  // namespace qplane
