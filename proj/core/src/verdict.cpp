#include "qplane/verdict.hpp"

namespace qplane {
namespace {

template <class Fn>
auto in_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DegreeCapExceeded& e) {
    throw DegreeCapExceeded(stage + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(stage + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(stage + ": " + e.what());
  }
}

Tri from_bool(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

VerdictReport verdict(const QuadraticAlgebra& a, const OrderCaps& caps) {
  VerdictReport r;
  const PointScheme e = in_stage("point-scheme", [&] { return point_scheme(a); });
  if (e.is_plane) {
    r.classification.type = CubicType::P;
  } else {
    r.classification = in_stage("classify", [&] { return classify_cubic(e.cubic); });
    r.second_hessian_zero = in_stage("hessian", [&] { return second_hessian_is_zero(e.cubic); });
  }
  const SigmaSystem s = in_stage("sigma", [&] { return SigmaSystem(a, r.classification); });
  r.sigma_norm = in_stage("sigma-norm", [&] { return sigma_norm(s, caps); });
  r.sigma_order = in_stage("sigma-order", [&] { return sigma_order(s, caps); });
  r.citations.push_back("norm." + r.sigma_norm.rule);
  r.citations.push_back("order." + r.sigma_order.rule);

  const OrderResult& n = r.sigma_norm.order;
  const OrderResult& o = r.sigma_order.order;
  if (n.is_exact() && o.is_exact() && o.value % n.value != 0)
    throw InvariantViolation("consistency: ||sigma|| = " + std::to_string(n.value) + " does not divide |sigma| = " +
                             std::to_string(o.value));

  // A fat point exists exactly when 1 < ||sigma|| < infinity.
  r.has_fat_point = n.is_unknown() ? Tri::Unknown : from_bool(n.is_exact() && n.value >= 2);
  r.citations.push_back("fat-point.norm-strictly-between-one-and-infinity");
  // The noncommutative projective scheme is finite over its center exactly
  // when ||sigma|| is finite; the algebra itself exactly when |sigma| is.
  r.proj_finite_over_center = n.is_unknown() ? Tri::Unknown : from_bool(n.is_exact());
  r.citations.push_back("proj-center.norm-finite");
  r.algebra_finite_over_center = o.is_unknown() ? Tri::Unknown : from_bool(o.is_exact());
  r.citations.push_back("algebra-center.order-finite");
  if (r.second_hessian_zero.value_or(false)) {
    r.citations.push_back("second-hessian.never-finite");
    if (r.algebra_finite_over_center == Tri::True)
      throw InvariantViolation("consistency: vanishing second Hessian with |sigma| finite");
  }

  const CubicType t = r.classification.type;
  if (t == CubicType::P) {
    r.beilinson_parameterization =
        "simple 2-regular modules are in bijection with the closed points of E = P^2";
    r.citations.push_back("beilinson.closed-points");
  } else if (is_second_hessian_type(t)) {
    r.beilinson_parameterization =
        "simple 2-regular modules are in bijection with the closed points of the cubic E in P^2";
    r.citations.push_back("beilinson.closed-points");
  } else if (r.has_fat_point == Tri::True) {
    r.beilinson_parameterization = "fat points exist (||sigma|| = " + std::to_string(n.value) +
                                   "), so simple 2-regular modules are not exhausted by the points of E";
    r.citations.push_back("beilinson.fat-points");
  } else if (r.has_fat_point == Tri::False) {
    r.beilinson_parameterization = "no fat points: ||sigma|| = " + to_string(n);
    r.citations.push_back("beilinson.fat-points");
  } else {
    r.beilinson_parameterization = "undecided: ||sigma|| is " + to_string(n);
  }
  return r;
}

}  // namespace qplane
