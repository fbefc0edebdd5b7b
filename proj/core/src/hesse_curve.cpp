#include "qplane/hesse_curve.hpp"

#include <algorithm>

#include "qplane/cubic_classify.hpp"

namespace qplane {
namespace {

const ProjPoint& origin() {
  static const ProjPoint o(Scalar(1), Scalar(-1), Scalar(0));
  return o;
}

void require_same_curve(const HessePoint& p, const HessePoint& q) {
  if (p.curve() != q.curve() && p.curve()->lambda() != q.curve()->lambda())
    throw InputError("points lie on different Hesse curves");
}

// Third intersection of the chord (or tangent) through p and q; p + q is its
// negative because o is a flex.
ProjPoint chord_sum(const HessePoint& p, const HessePoint& q) {
  const auto r = third_point(p.curve()->equation(), p.point(), q.point());
  if (!r) throw InvariantViolation("a line lies on a smooth cubic");
  return ProjPoint((*r)[1], (*r)[0], (*r)[2]);
}

}  // namespace

HesseCurve::HesseCurve(const Scalar& lambda) : lambda_(lambda) {
  if (lambda.pow(3) == Scalar(27)) throw InputError("lambda^3 = 27 gives a singular curve");
  equation_ = TernaryForm::monomial(Scalar(1), {3, 0, 0}) + TernaryForm::monomial(Scalar(1), {0, 3, 0}) +
              TernaryForm::monomial(Scalar(1), {0, 0, 3}) - TernaryForm::monomial(lambda, {1, 1, 1});
}

CurvePtr HesseCurve::create(const Scalar& lambda) { return CurvePtr(new HesseCurve(lambda)); }

HessePoint::HessePoint(CurvePtr curve, const ProjPoint& p) : curve_(std::move(curve)), p_(p) {
  if (!curve_->contains(p_)) throw InputError(p_.to_string() + " is not on the curve");
}

HessePoint HessePoint::identity(CurvePtr curve) { return HessePoint(std::move(curve), origin()); }

bool HessePoint::is_identity() const { return p_ == origin(); }

HessePoint ec_negate(const HessePoint& p) {
  const ProjPoint& v = p.point();
  return HessePoint(p.curve(), ProjPoint(v[1], v[0], v[2]));
}

HessePoint ec_add(const HessePoint& p, const HessePoint& q) {
  require_same_curve(p, q);
  const Scalar &x1 = p.point()[0], &y1 = p.point()[1], &z1 = p.point()[2];
  const Scalar &x2 = q.point()[0], &y2 = q.point()[1], &z2 = q.point()[2];
  Vec3 r;
  if (p == q) {
    const Scalar x3 = x1.pow(3), y3 = y1.pow(3), z3 = z1.pow(3);
    r = {y1 * (x3 - z3), x1 * (z3 - y3), z1 * (y3 - x3)};
  } else {
    r = {y1 * y1 * x2 * z2 - y2 * y2 * x1 * z1, x1 * x1 * y2 * z2 - x2 * x2 * y1 * z1,
         z1 * z1 * x2 * y2 - z2 * z2 * x1 * y1};
  }
  if (is_zero(r)) return HessePoint(p.curve(), chord_sum(p, q));
  return HessePoint(p.curve(), ProjPoint(r));
}

HessePoint ec_multiply(const HessePoint& p, long n) {
  HessePoint base = n < 0 ? ec_negate(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  HessePoint acc = HessePoint::identity(p.curve());
  while (k) {
    if (k & 1UL) acc = ec_add(acc, base);
    k >>= 1U;
    if (k) base = ec_add(base, base);
  }
  return acc;
}

OrderResult point_order(const HessePoint& p, long cap) {
  if (cap < 1) throw InputError("order cap must be at least 1");
  HessePoint acc = p;
  for (long n = 1; n <= cap; ++n) {
    if (acc.is_identity()) return OrderResult::exact(n);
    acc = ec_add(acc, p);
  }
  return OrderResult::unknown(cap);
}

std::vector<HessePoint> three_torsion(const CurvePtr& curve) {
  std::vector<HessePoint> out;
  for (const auto& p : inflection_points(curve->equation())) {
    HessePoint h(curve, p);
    if (!ec_multiply(h, 3).is_identity()) throw InvariantViolation("flex " + p.to_string() + " is not 3-torsion");
    out.push_back(h);
  }
  if (out.size() != 9) throw InvariantViolation("expected nine 3-torsion points");
  return out;
}

bool translation_is_linear(const HessePoint& p) { return ec_multiply(p, 3).is_identity(); }

}  // namespace qplane
