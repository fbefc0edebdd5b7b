#include "qplane/order_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qplane/field_ext.hpp"
#include "qplane/hesse_curve.hpp"

namespace qplane {
namespace {

using Mat2 = Matrix<Scalar>;

Mat3 canonical_matrix(Mat3 m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) {
        const Scalar inv = e.inverse();
        for (auto& r : m)
          for (auto& x : r) x = x * inv;
        return m;
      }
  throw InputError("zero matrix is not a projective map");
}

long nth_prime(std::size_t n) {
  static std::vector<long> primes{2};
  for (long c = primes.back() + 1; primes.size() <= n; ++c)
    if (std::none_of(primes.begin(), primes.end(), [c](long p) { return c % p == 0; })) primes.push_back(c);
  return primes[n];
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

void check_caps(const OrderCaps& caps) {
  if (caps.fit < 1 || caps.torsion < 1) throw InputError("order caps must be positive");
}

// ---- Moebius maps on a component's parameter line ----

Scalar det2(const BinaryParam& a, const BinaryParam& b) { return a[0] * b[1] - a[1] * b[0]; }

BinaryParam apply2(const Mat2& m, const BinaryParam& t) {
  return {m[0][0] * t[0] + m[0][1] * t[1], m[1][0] * t[0] + m[1][1] * t[1]};
}

std::optional<Mat2> fit_mobius(const std::vector<BinaryParam>& from, const std::vector<BinaryParam>& to) {
  Matrix<Scalar> rows;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto &t = from[i], &s = to[i];
    rows.push_back({t[0] * s[1], t[1] * s[1], -t[0] * s[0], -t[1] * s[0]});
  }
  const auto ns = nullspace(rows, 4);
  if (ns.size() != 1) return std::nullopt;
  Mat2 m{{ns[0][0], ns[0][1]}, {ns[0][2], ns[0][3]}};
  if (determinant(m).is_zero()) return std::nullopt;
  return m;
}

struct MobiusShape {
  enum class Kind { Identity, Parabolic, Semisimple } kind = Kind::Identity;
  Scalar ratio{1};  // eigenvalue ratio, Semisimple only
};

MobiusShape shape(const Mat2& m) {
  if (m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1]) return {};
  const Scalar tr = m[0][0] + m[1][1], det = determinant(m);
  if ((tr * tr - Scalar(4) * det).is_zero()) return {MobiusShape::Kind::Parabolic, Scalar(1)};
  const KPoly chi(std::vector<Scalar>{det, -tr, Scalar(1)});
  const Adjunction adj = adjoin_root(common_field(det.field(), tr.field()), chi);
  const Scalar e1 = adj.root, e2 = tr.in(adj.field) - e1;
  return {MobiusShape::Kind::Semisimple, e1 / e2};
}

std::optional<Scalar> eigenvalue_at(const Mat2& m, const BinaryParam& t) {
  const BinaryParam img = apply2(m, t);
  if (!det2(img, t).is_zero()) return std::nullopt;
  return t[0].is_zero() ? img[1] / t[1] : img[0] / t[0];
}

OrderResult combine_lcm(const std::vector<OrderResult>& parts) {
  long l = 1;
  for (const auto& r : parts) {
    if (r.is_infinite() && r.reason == InfinityReason::AdditiveUnipotent) return r;
  }
  for (const auto& r : parts) {
    if (r.is_infinite()) return r;
    l = std::lcm(l, r.value);
  }
  return OrderResult::exact(l);
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjectiveMap

ProjectiveMap::ProjectiveMap(Mat3 m) : m_(canonical_matrix(std::move(m))) {
  if (determinant(m_).is_zero()) throw InputError("singular matrix is not a projective map");
}

ProjectiveMap ProjectiveMap::identity() { return ProjectiveMap(identity_matrix<Scalar>(3)); }

ProjPoint ProjectiveMap::apply(const ProjPoint& p) const { return ProjPoint(qplane::apply(m_, p.coords())); }

ProjectiveMap ProjectiveMap::then(const ProjectiveMap& next) const { return ProjectiveMap(matmul(next.m_, m_)); }

ProjectiveMap ProjectiveMap::pow(long n) const {
  if (n < 0) throw InputError("negative power of a projective map");
  Mat3 r = identity_matrix<Scalar>(3), b = m_;
  for (unsigned long e = static_cast<unsigned long>(n); e; e >>= 1U) {
    if (e & 1UL) r = matmul(r, b);
    if (e > 1) b = matmul(b, b);
  }
  return ProjectiveMap(r);
}

bool ProjectiveMap::is_identity() const { return *this == identity(); }

bool ProjectiveMap::preserves(const TernaryForm& g) const { return proportional(g.compose(m_), g); }

// ---------------------------------------------------------------------------
// SigmaSystem

SigmaSystem::SigmaSystem(QuadraticAlgebra a, CubicClassification cls)
    : a_(std::move(a)), cls_(std::move(cls)), e_(point_scheme(a_)) {
  const bool plane = cls_.type == CubicType::P;
  if (plane != e_.is_plane || (!plane && !proportional(e_.cubic, cls_.cubic)))
    throw InputError("classification does not describe this algebra's point scheme");
}

SigmaSystem SigmaSystem::from_algebra(const QuadraticAlgebra& a) {
  const PointScheme e = point_scheme(a);
  CubicClassification cls;
  if (e.is_plane) cls.type = CubicType::P;
  else cls = classify_cubic(e.cubic);
  return SigmaSystem(a, std::move(cls));
}

bool SigmaSystem::has_pointwise_sigma() const { return cls_.type != CubicType::TL && cls_.type != CubicType::WL; }

std::optional<ProjPoint> SigmaSystem::sigma(const ProjPoint& p) const { return sigma_eval(a_, e_, p); }

std::optional<ProjPoint> SigmaSystem::sigma_power(const ProjPoint& p, long i) const {
  std::optional<ProjPoint> q = p;
  for (long k = 0; k < i && q; ++k) q = sigma(*q);
  return q;
}

int SigmaSystem::component_of(const ProjPoint& p) const {
  int found = -1;
  for (std::size_t j = 0; j < cls_.components.size(); ++j)
    if (cls_.components[j].equation.evaluate(p).is_zero()) {
      if (found >= 0) return -1;
      found = static_cast<int>(j);
    }
  return found;
}

namespace {

// Points of a smooth cubic: rational points on the coordinate lines and
// their images, one point on a chord through a seed (after a quadratic
// extension if needed), then third points of chords in a fixed order.
class CurvePool {
 public:
  CurvePool(const SigmaSystem& s, CurveSampleState& st) : s_(s), g_(s.classification().cubic), st_(st), pool_(st.pool) {}

  // Pairs (i, j) with i <= j are visited in a fixed order that survives
  // between calls, so growing the pool never repeats a chord.
  void grow(std::size_t need) {
    if (pool_.empty()) seed();
    while (pool_.size() < need) {
      if (st_.j >= pool_.size()) {
        add_line_point();
        continue;
      }
      const auto r = third_point(g_, pool_[st_.i], pool_[st_.j]);
      if (++st_.i > st_.j) {
        ++st_.j;
        st_.i = 0;
      }
      if (r) push(lower_to_rationals(*r));
    }
  }

 private:
  bool push(const ProjPoint& p) {
    if (std::find(pool_.begin(), pool_.end(), p) != pool_.end()) return false;
    pool_.push_back(p);
    return true;
  }

  FieldPtr field() const {
    FieldPtr f = common_field(s_.algebra().field(), g_.field());
    for (const auto& p : pool_) f = common_field(f, p.field());
    return f;
  }

  void seed() {
    const FieldPtr f = field();
    std::vector<ProjPoint> found;
    for (int zero = 0; zero < 3; ++zero) {
      const int a = (zero + 1) % 3, b = (zero + 2) % 3;
      auto at = [&](const Scalar& u, const Scalar& w) {
        Vec3 v{Scalar(0), Scalar(0), Scalar(0)};
        v[static_cast<std::size_t>(a)] = u;
        v[static_cast<std::size_t>(b)] = w;
        return v;
      };
      if (g_.evaluate(at(Scalar(1), Scalar(0))).is_zero()) found.emplace_back(at(Scalar(1), Scalar(0)));
      std::vector<Scalar> xs, ys;
      for (int u = 0; u <= 3; ++u) {
        xs.emplace_back(u);
        ys.push_back(g_.evaluate(at(Scalar(u), Scalar(1))));
      }
      for (const auto& r : roots_in(f, interpolate(xs, ys))) found.emplace_back(at(r, Scalar(1)));
    }
    for (const auto& p : found) push(lower_to_rationals(p));
    const std::size_t n = pool_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (const auto q = s_.sigma(pool_[i])) push(lower_to_rationals(*q));
    if (pool_.empty()) {
      // No point on a coordinate line over the base field: adjoin one.
      std::vector<Scalar> xs, ys;
      for (int u = 0; u <= 3; ++u) {
        xs.emplace_back(u);
        ys.push_back(g_.evaluate(Vec3{Scalar(u), Scalar(1), Scalar(0)}));
      }
      const Adjunction adj = adjoin_root(f, interpolate(xs, ys));
      push(ProjPoint(adj.root, Scalar(1), Scalar(0)));
    }
    add_line_point();
  }

  // Residual intersection of the line through pool_[0] and (1, t, t^2 + 1).
  void add_line_point() {
    const Vec3 base = pool_[0].coords();
    for (;; ++st_.next_t) {
      const Scalar t(st_.next_t);
      const Vec3 d{Scalar(1), t, t * t + Scalar(1)};
      if (proportional(d, base)) continue;
      std::vector<Scalar> xs, ys;
      for (int v = 1; v <= 3; ++v) {
        xs.emplace_back(v);
        ys.push_back(g_.evaluate(base + scale(d, Scalar(v))) / Scalar(v));
      }
      const KPoly quad = interpolate(xs, ys);
      if (quad.degree() < 1) continue;
      const Adjunction adj = adjoin_root(field(), quad);
      ++st_.next_t;
      if (push(lower_to_rationals(ProjPoint(base + scale(d, adj.root))))) return;
    }
  }

  const SigmaSystem& s_;
  TernaryForm g_;
  CurveSampleState& st_;
  std::vector<ProjPoint>& pool_;
};

bool is_singular_point(const CubicClassification& cls, const ProjPoint& p) {
  for (const auto& sp : cls.singular_points)
    if (sp.point == p) return true;
  return false;
}

}  // namespace

std::vector<ProjPoint> SigmaSystem::samples(std::size_t count, std::size_t offset) const {
  if (!has_pointwise_sigma())
    throw InputError("sigma is not defined pointwise on a non-reduced point scheme (type " + to_string(cls_.type) + ")");
  std::vector<ProjPoint> out;
  auto take = [&](const std::function<std::optional<ProjPoint>(long)>& nth) {
    std::size_t usable = 0;
    for (std::size_t k = 0; usable < offset + count; ++k) {
      if (k > 64 * (offset + count) + 64) throw InvariantViolation("could not find enough sample points");
      const auto p = nth(nth_prime(k));
      if (!p || !sigma(*p)) continue;
      if (usable++ >= offset) out.push_back(*p);
    }
  };
  if (is_plane()) {
    take([](long t) { return std::optional<ProjPoint>(ProjPoint(Scalar(1), Scalar(t), Scalar(t * t))); });
    return out;
  }
  if (cls_.type == CubicType::EC) {
    CurvePool(*this, curve_).grow(offset + count);
    out.assign(curve_.pool.begin() + static_cast<long>(offset), curve_.pool.begin() + static_cast<long>(offset + count));
    return out;
  }
  for (std::size_t j = 0; j < cls_.components.size(); ++j) {
    const auto& param = cls_.components[j].parametrization;
    if (!param) throw InvariantViolation("component without a parametrization");
    take([&](long t) -> std::optional<ProjPoint> {
      const ProjPoint p = param->at(Scalar(t));
      if (is_singular_point(cls_, p) || component_of(p) != static_cast<int>(j)) return std::nullopt;
      return lower_to_rationals(p);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fitting

namespace {

std::optional<ProjectiveMap> fit_on(const SigmaSystem& s, long i, const std::vector<ProjPoint>& pts) {
  Matrix<Scalar> rows;
  for (const auto& p : pts) {
    const auto q = s.sigma_power(p, i);
    if (!q) continue;
    const Vec3 &v = p.coords(), &w = q->coords();
    // (T v) x w = 0, with T[r][c] at index 3 r + c.
    const int pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (const auto& pr : pairs) {
      std::vector<Scalar> row(9, Scalar(0));
      for (int c = 0; c < 3; ++c) {
        row[static_cast<std::size_t>(3 * pr[0] + c)] = v[static_cast<std::size_t>(c)] * w[static_cast<std::size_t>(pr[1])];
        row[static_cast<std::size_t>(3 * pr[1] + c)] = -v[static_cast<std::size_t>(c)] * w[static_cast<std::size_t>(pr[0])];
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw InputError("sigma is undefined at every sample point");
  const auto ns = nullspace(rows, 9);
  if (ns.size() != 1) return std::nullopt;
  Mat3 t(3, std::vector<Scalar>(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ns[0][static_cast<std::size_t>(3 * r + c)];
  if (determinant(t).is_zero()) return std::nullopt;
  return ProjectiveMap(t);
}

bool agrees(const SigmaSystem& s, long i, const ProjectiveMap& t, const std::vector<ProjPoint>& pts) {
  for (const auto& p : pts) {
    const auto q = s.sigma_power(p, i);
    if (!q || *q != t.apply(p)) return false;
  }
  return true;
}

}  // namespace

std::optional<ProjectiveMap> fit_projective_extension(const SigmaSystem& s, long i, const FitOptions& opt) {
  if (i < 1) throw InputError("fitting exponent must be at least 1");
  if (opt.per_component < 4) throw InputError("fitting needs at least 4 points per component");
  const auto t = fit_on(s, i, s.samples(opt.per_component, opt.offset));
  if (!t) return std::nullopt;
  if (!agrees(s, i, *t, s.samples(opt.per_component, opt.offset + opt.per_component))) return std::nullopt;
  if (!s.is_plane() && !t->preserves(s.classification().cubic)) return std::nullopt;
  return t;
}

std::optional<ProjectiveMap> fit_projective_extension(const QuadraticAlgebra& a, const CubicClassification& cls,
                                                      long i) {
  return fit_projective_extension(SigmaSystem(a, cls), i);
}

// ---------------------------------------------------------------------------
// Component dynamics

namespace {

struct ComponentMap {
  Mat2 mobius;  // sigma^k on the component's parameter line
  MobiusShape shape;
};

struct Dynamics {
  long period = 1;  // k: sigma^k fixes every component
  std::vector<ComponentMap> maps;
};

std::vector<int> component_permutation(const SigmaSystem& s) {
  const auto& cls = s.classification();
  std::vector<int> perm;
  const auto pts = s.samples(1);
  for (std::size_t j = 0; j < cls.components.size(); ++j) {
    const int img = s.component_of(*s.sigma(pts[j]));
    if (img < 0) throw InvariantViolation("sigma of a smooth point is not smooth");
    perm.push_back(img);
  }
  return perm;
}

long permutation_order(const std::vector<int>& perm) {
  long order = 1;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    long len = 1;
    for (int c = perm[j]; c != static_cast<int>(j); c = perm[static_cast<std::size_t>(c)]) ++len;
    order = std::lcm(order, len);
  }
  return order;
}

Dynamics dynamics(const SigmaSystem& s, long period) {
  const auto& cls = s.classification();
  const std::size_t per = 5;
  const auto pts = s.samples(per);
  Dynamics d;
  d.period = period;
  for (std::size_t j = 0; j < cls.components.size(); ++j) {
    const Parametrization& param = *cls.components[j].parametrization;
    std::vector<BinaryParam> from, to;
    for (std::size_t m = 0; m < per; ++m) {
      const ProjPoint& p = pts[j * per + m];
      const auto q = s.sigma_power(p, period);
      const auto tp = param.preimage(p);
      const auto tq = q ? param.preimage(*q) : std::nullopt;
      if (!tp || !tq) throw InvariantViolation("sigma^k leaves a component");
      from.push_back(*tp);
      to.push_back(*tq);
    }
    const auto m = fit_mobius(from, to);
    if (!m) throw InvariantViolation("sigma^k is not fractional-linear on a component");
    d.maps.push_back({*m, shape(*m)});
  }
  return d;
}

OrderResult mobius_order(const MobiusShape& sh) {
  switch (sh.kind) {
    case MobiusShape::Kind::Identity: return OrderResult::exact(1);
    case MobiusShape::Kind::Parabolic: return OrderResult::infinite(InfinityReason::AdditiveUnipotent);
    case MobiusShape::Kind::Semisimple: return root_of_unity_order(sh.ratio);
  }
  return OrderResult::unknown(0);
}

// Multiplier of sigma^k at the fixed point `at` of component j, the other
// fixed point being `other`; nullopt when `at` is not fixed.
std::optional<Scalar> multiplier(const SigmaSystem& s, const ComponentMap& cm, std::size_t j, const ProjPoint& at,
                                 const ProjPoint& other) {
  const Parametrization& param = *s.classification().components[j].parametrization;
  const auto tp = param.preimage(at), tq = param.preimage(other);
  if (!tp || !tq) throw InvariantViolation("singular point is not on the component");
  const auto ep = eigenvalue_at(cm.mobius, *tp), eq = eigenvalue_at(cm.mobius, *tq);
  if (!ep || !eq) return std::nullopt;
  return *eq / *ep;
}

// A scalar mu such that sigma^(k n) extends to P^2 exactly when mu^n = 1, for
// the types whose linear symmetries are a torus.
struct TorusInvariant {
  long period;
  std::optional<Scalar> mu;   // nullopt: some sigma^k is parabolic
};

TorusInvariant torus_invariant(const SigmaSystem& s) {
  const auto& cls = s.classification();
  const long k = permutation_order(component_permutation(s));
  Dynamics d = dynamics(s, k);
  for (const auto& m : d.maps)
    if (m.shape.kind == MobiusShape::Kind::Parabolic) return {k, std::nullopt};

  const auto& sing = cls.singular_points;
  switch (cls.type) {
    case CubicType::S: {
      // Vertex v_i is the one off line i; line i contributes its multiplier
      // at v_{i+1}. For a diagonal map the three multipliers multiply to 1.
      std::vector<ProjPoint> v(3, sing[0].point);
      for (std::size_t i = 0; i < 3; ++i)
        for (const auto& sp : sing)
          if (!cls.components[i].equation.evaluate(sp.point).is_zero()) v[i] = sp.point;
      Scalar mu(1);
      for (std::size_t i = 0; i < 3; ++i) {
        const auto m = multiplier(s, d.maps[i], i, v[(i + 1) % 3], v[(i + 2) % 3]);
        if (!m) throw InvariantViolation("sigma^k moves a vertex of the triangle");
        mu *= *m;
      }
      return {k, mu};
    }
    case CubicType::SPrime: {
      // Line (index 0) and conic (index 1) meet at P, Q. A diagonal map that
      // keeps the conic has line multiplier equal to the conic multiplier squared.
      const ProjPoint &p = sing[0].point, &q = sing[1].point;
      auto mu_for = [&](const Dynamics& dd) -> std::optional<Scalar> {
        const auto ml = multiplier(s, dd.maps[0], 0, p, q), mc = multiplier(s, dd.maps[1], 1, p, q);
        if (!ml || !mc) return std::nullopt;
        return *ml / (*mc * *mc);
      };
      if (auto mu = mu_for(d)) return {k, mu};
      d = dynamics(s, 2 * k);  // sigma swaps P and Q
      if (auto mu = mu_for(d)) return {2 * k, mu};
      throw InvariantViolation("sigma^2 does not fix the meeting points of line and conic");
    }
    case CubicType::NC:
      // Linear symmetries fixing both branches at the node act as t -> c t
      // with c^3 = 1; the eigenvalue ratio does not depend on orientation.
      return {k, d.maps[0].shape.ratio.pow(3)};
    default: throw InvariantViolation("no torus invariant for type " + to_string(cls.type));
  }
}

bool hesse_translation(const SigmaSystem& s, std::optional<HessePoint>* p_out) {
  const auto& cls = s.classification();
  if (!cls.hesse_lambda) return false;
  const auto curve = HesseCurve::create(*cls.hesse_lambda);
  const auto p = s.sigma(ProjPoint(Scalar(1), Scalar(-1), Scalar(0)));
  if (!p) return false;
  const HessePoint hp(curve, *p);
  for (const auto& q : s.samples(8)) {
    const auto img = s.sigma(q);
    if (!img || *img != ec_add(HessePoint(curve, q), hp).point()) return false;
  }
  *p_out = hp;
  return true;
}

NormResult exact_with_witness(const SigmaSystem& s, long n, std::string rule, std::vector<long> tried) {
  for (long d : divisors(n)) {
    if (d == n) break;
    tried.push_back(d);
    if (fit_projective_extension(s, d)) throw InvariantViolation("sigma^" + std::to_string(d) + " extends below the computed order");
  }
  tried.push_back(n);
  auto t = fit_projective_extension(s, n);
  if (!t) throw InvariantViolation("sigma^" + std::to_string(n) + " does not extend although it should");
  return {OrderResult::exact(n), t, std::move(rule), std::move(tried)};
}

NormResult sweep(const SigmaSystem& s, long cap) {
  std::vector<long> tried;
  for (long i = 1; i <= cap; ++i) {
    tried.push_back(i);
    if (auto t = fit_projective_extension(s, i)) return {OrderResult::exact(i), t, "sweep", tried};
  }
  return {OrderResult::unknown(cap), std::nullopt, "sweep", tried};
}

}  // namespace

NormResult sigma_norm(const SigmaSystem& s, const OrderCaps& caps) {
  check_caps(caps);
  const CubicType type = s.classification().type;
  if (type == CubicType::P) return exact_with_witness(s, 1, "plane", {});
  if (is_second_hessian_type(type)) return {OrderResult::infinite(InfinityReason::TypeRule), std::nullopt, "type-rule", {}};

  if (type == CubicType::S || type == CubicType::SPrime || type == CubicType::NC) {
    const TorusInvariant inv = torus_invariant(s);
    if (!inv.mu) return {OrderResult::infinite(InfinityReason::AdditiveUnipotent), std::nullopt, "component-multiplier", {}};
    const OrderResult r = root_of_unity_order(*inv.mu);
    if (r.is_infinite()) return {r, std::nullopt, "component-multiplier", {}};
    // sigma^(k r) extends, so the answer divides k r.
    const long n = inv.period * r.value;
    std::vector<long> tried;
    for (long d : divisors(n)) {
      if (d > caps.fit) return {OrderResult::unknown(caps.fit), std::nullopt, "component-multiplier", tried};
      tried.push_back(d);
      if (auto t = fit_projective_extension(s, d)) return {OrderResult::exact(d), t, "component-multiplier", tried};
    }
    throw InvariantViolation("sigma^" + std::to_string(n) + " does not extend although its invariant is trivial");
  }

  // Elliptic E.
  std::optional<HessePoint> p;
  if (hesse_translation(s, &p)) {
    const OrderResult r = point_order(ec_multiply(*p, 3), caps.torsion);
    if (!r.is_exact()) return {r, std::nullopt, "translation", {}};
    return exact_with_witness(s, r.value, "translation", {});
  }
  return sweep(s, caps.fit);
}

NormResult sigma_norm(const QuadraticAlgebra& a, const CubicClassification& cls, const OrderCaps& caps) {
  return sigma_norm(SigmaSystem(a, cls), caps);
}

// ---------------------------------------------------------------------------
// |sigma|

namespace {

bool is_identity_on_samples(const SigmaSystem& s, long n) {
  for (const auto& p : s.samples(8, 0)) {
    const auto q = s.sigma_power(p, n);
    if (!q || *q != p) return false;
  }
  return true;
}

SigmaOrderResult verified(const SigmaSystem& s, OrderResult r, std::string rule) {
  if (r.is_exact() && !is_identity_on_samples(s, r.value))
    throw InvariantViolation("sigma^" + std::to_string(r.value) + " is not the identity");
  return {r, std::move(rule)};
}

}  // namespace

SigmaOrderResult sigma_order(const SigmaSystem& s, const OrderCaps& caps) {
  check_caps(caps);
  const CubicType type = s.classification().type;
  if (type == CubicType::P) {
    const auto t = fit_projective_extension(s, 1);
    if (!t) throw InvariantViolation("sigma is not linear on P^2");
    return verified(s, projective_order(*t), "linear");
  }
  if (!s.has_pointwise_sigma())
    return {OrderResult::infinite(InfinityReason::TypeRule), "type-rule"};
  if (type == CubicType::EC) {
    std::optional<HessePoint> p;
    if (hesse_translation(s, &p)) return verified(s, point_order(*p, caps.torsion), "translation");
    // A nontrivial automorphism of a genus one curve has at most 9 fixed
    // points, so agreement with the identity on 8 + 8 samples decides.
    for (long i = 1; i <= caps.fit; ++i) {
      bool id = true;
      for (const auto& q : s.samples(16)) id = id && s.sigma_power(q, i) == q;
      if (id) return {OrderResult::exact(i), "sweep"};
    }
    return {OrderResult::unknown(caps.fit), "sweep"};
  }
  const long k = permutation_order(component_permutation(s));
  const Dynamics d = dynamics(s, k);
  std::vector<OrderResult> parts;
  for (const auto& m : d.maps) parts.push_back(mobius_order(m.shape));
  OrderResult r = combine_lcm(parts);
  if (r.is_exact()) r = OrderResult::exact(r.value * k);
  return verified(s, r, "component-mobius");
}

SigmaOrderResult sigma_order(const QuadraticAlgebra& a, const CubicClassification& cls, const OrderCaps& caps) {
  return sigma_order(SigmaSystem(a, cls), caps);
}

OrderResult projective_order(const ProjectiveMap& t) {
  const Mat3& m = t.matrix();
  const Scalar tr = m[0][0] + m[1][1] + m[2][2];
  const Scalar c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                    m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const Scalar det = determinant(m);
  const KPoly chi(std::vector<Scalar>{-det, c2, -tr, Scalar(1)});
  std::vector<Scalar> entries;
  for (const auto& row : m) entries.insert(entries.end(), row.begin(), row.end());
  const FieldPtr f = common_field(entries);
  const Splitting sp = split_completely(f, chi);
  // Diagonalizable exactly when each eigenvalue's eigenspace has full size.
  int total = 0;
  for (const auto& e : sp.roots) {
    Mat3 shifted = m;
    for (int i = 0; i < 3; ++i) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= e;
    total += 3 - static_cast<int>(rank(shifted));
  }
  if (total < 3) return OrderResult::infinite(InfinityReason::AdditiveUnipotent);
  std::vector<OrderResult> parts;
  for (const auto& e : sp.roots) parts.push_back(root_of_unity_order(e / sp.roots[0]));
  return combine_lcm(parts);
}

WitnessCheck check_witness(const SigmaSystem& s, long n, const ProjectiveMap& t, std::size_t fresh) {
  WitnessCheck w;
  const FitOptions opt;
  const auto pts = s.samples(fresh, 2 * opt.per_component);
  w.points_checked = pts.size();
  w.agrees_on_fresh_points = agrees(s, n, t, pts);
  w.preserves_e = s.is_plane() || t.preserves(s.classification().cubic);
  w.divisors_fail = true;
  for (long d : divisors(n))
    if (d < n && fit_projective_extension(s, d)) w.divisors_fail = false;
  return w;
}

}  // namespace qplane
