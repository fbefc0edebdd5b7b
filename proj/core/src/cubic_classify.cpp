#include "qplane/cubic_classify.hpp"

#include <algorithm>
#include <tuple>

#include "qplane/field_ext.hpp"

namespace qplane {
namespace {

Scalar lower(const Scalar& s) { return s.is_rational() ? Scalar(s.rational_value()) : s; }

// f(x, y0, z0) as a polynomial in x.
KPoly in_x(const TernaryForm& f, const Scalar& y0, const Scalar& z0) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1, Scalar(0));
  for (const auto& [e, s] : f.terms()) c[e[0]] += s * y0.pow(e[1]) * z0.pow(e[2]);
  return KPoly(std::move(c));
}

// f(0, y, 1) as a polynomial in y.
KPoly in_y(const TernaryForm& f) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1, Scalar(0));
  for (const auto& [e, s] : f.terms())
    if (e[0] == 0) c[e[1]] += s;
  return KPoly(std::move(c));
}

int x_degree(const TernaryForm& f) {
  int d = -1;
  for (const auto& [e, s] : f.terms()) d = std::max(d, e[0]);
  return d;
}

// Sylvester determinant of a (degree m) and b (degree n) with the given
// formal degrees; leading coefficients may vanish.
Scalar sylvester(const KPoly& a, int m, const KPoly& b, int n) {
  const int size = m + n;
  if (size == 0) return Scalar(1);
  Matrix<Scalar> s(static_cast<std::size_t>(size), std::vector<Scalar>(static_cast<std::size_t>(size), Scalar(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);
  return determinant(s);
}

KPoly gcd_in_x(const std::vector<TernaryForm>& forms, const Scalar& y0, const Scalar& z0) {
  KPoly h;
  for (const auto& f : forms) h = gcd(h, in_x(f, y0, z0));
  return h;
}

// p(t) evaluated with polynomial arguments: f(v_0(t), v_1(t), v_2(t)).
KPoly restrict_form(const TernaryForm& f, const std::array<KPoly, 3>& v) {
  KPoly acc;
  for (const auto& [e, s] : f.terms()) acc += (v[0].pow(e[0]) * v[1].pow(e[1]) * v[2].pow(e[2])).scaled(s);
  return acc;
}

Vec3 gradient_at(const TernaryForm& f, const Vec3& p) {
  return {f.derivative(0).evaluate(p), f.derivative(1).evaluate(p), f.derivative(2).evaluate(p)};
}

Mat3 hessian_matrix_at(const TernaryForm& f, const Vec3& p) {
  Mat3 h(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j).evaluate(p);
  return h;
}

int first_nonzero(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) return i;
  throw InvariantViolation("zero vector");
}

std::pair<int, int> other_indices(int c) { return c == 0 ? std::pair{1, 2} : c == 1 ? std::pair{0, 2} : std::pair{0, 1}; }

Vec3 unit(int i) {
  Vec3 v{Scalar(0), Scalar(0), Scalar(0)};
  v[i] = Scalar(1);
  return v;
}

// Roots (u : w) of the binary form sum_k c_k u^k w^(n-k), given as c(t) with
// t = u / w and formal degree n. Extends `field` as needed.
std::vector<BinaryParam> binary_roots(FieldPtr& field, const KPoly& c, int n, int max_degree) {
  std::vector<BinaryParam> out;
  if (c.is_zero()) throw InvariantViolation("binary form vanishes identically");
  if (c.degree() < n) out.push_back(infinite_param());
  if (c.degree() >= 1) {
    Splitting sp = split_completely(field, c, max_degree);
    field = sp.field;
    for (const auto& r : sp.roots) out.push_back(finite_param(r));
  }
  return out;
}

// Lines through p meeting the line x_c = 0 (c the first nonzero index of p) at
// the roots of the binary form `restricted` in (u, w) with v = u e_a + w e_b.
std::vector<LinearForm> lines_through(const Vec3& p, const KPoly& restricted, int n, int max_degree) {
  const int c = first_nonzero(p);
  const auto [a, b] = other_indices(c);
  FieldPtr field = common_field(field_of(p), common_field(restricted.coeffs()));
  std::vector<LinearForm> out;
  for (const auto& r : binary_roots(field, restricted, n, max_degree)) {
    Vec3 v{Scalar(0), Scalar(0), Scalar(0)};
    v[a] = r[0];
    v[b] = r[1];
    out.push_back(LinearForm::through(p, v).normalized());
  }
  return out;
}

void sort_components(std::vector<CurveComponent>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const CurveComponent& l, const CurveComponent& r) {
    if (l.equation.degree() != r.equation.degree()) return l.equation.degree() < r.equation.degree();
    return GrlexDescending()(l.equation.leading_term().first, r.equation.leading_term().first);
  });
}

CurveComponent line_component(const LinearForm& l, int multiplicity) {
  CurveComponent c;
  c.equation = TernaryForm::from_linear(l).normalized();
  c.kind = ComponentKind::Line;
  c.multiplicity = multiplicity;
  c.parametrization = Parametrization::line(l);
  return c;
}

CurveComponent conic_component(const TernaryForm& q, const std::vector<SingularPoint>& singular) {
  CurveComponent c;
  c.equation = q.normalized();
  c.kind = ComponentKind::Conic;
  std::optional<ProjPoint> base;
  for (int i = 0; i < 3 && !base; ++i)
    if (q.evaluate(unit(i)).is_zero()) base = ProjPoint(unit(i));
  for (const auto& s : singular)
    if (!base && q.evaluate(s.point).is_zero()) base = s.point;
  if (!base) throw InvariantViolation("no known point on the conic component " + q.to_string());
  c.parametrization = Parametrization::conic(c.equation, *base);
  return c;
}

LinearForm line_of(const TernaryForm& f) { return to_linear(f); }

}  // namespace

// ---------------------------------------------------------------------------

ProjPoint lower_to_rationals(const ProjPoint& p) {
  return ProjPoint(lower(p[0]), lower(p[1]), lower(p[2]));
}

KPoly affine_resultant_x(const TernaryForm& f, const TernaryForm& g) {
  if (f.is_zero() || g.is_zero()) return KPoly();
  const int m = x_degree(f), n = x_degree(g);
  const int bound = f.degree() * g.degree();
  std::vector<Scalar> ys, vals;
  for (int k = 0; k <= bound; ++k) {
    ys.emplace_back(k);
    vals.push_back(sylvester(in_x(f, Scalar(k), Scalar(1)), m, in_x(g, Scalar(k), Scalar(1)), n));
  }
  return interpolate(ys, vals);
}

std::vector<ProjPoint> common_zeros(const std::vector<TernaryForm>& input, int max_degree) {
  std::vector<TernaryForm> forms;
  for (const auto& f : input)
    if (!f.is_zero()) forms.push_back(f);
  if (forms.empty()) throw InputError("the zero form vanishes on all of P^2");
  FieldPtr acc;
  for (const auto& f : forms) acc = common_field(acc, f.field());

  std::vector<ProjPoint> found;

  // The line z = 0.
  {
    const KPoly h = gcd_in_x(forms, Scalar(1), Scalar(0));
    if (h.is_zero()) throw InputError("the forms share the line z = 0");
    if (h.degree() >= 1) {
      Splitting sp = split_completely(acc, h, max_degree);
      acc = sp.field;
      for (const auto& r : sp.roots) found.emplace_back(r, Scalar(1), Scalar(0));
    }
    bool at_x = true;
    for (const auto& f : forms) at_x = at_x && f.evaluate(unit(0)).is_zero();
    if (at_x) found.emplace_back(unit(0));
  }

  // The affine chart z = 1: eliminate x, then back-substitute.
  KPoly r;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      // Two x-free polynomials have resultant 1 even where both vanish; their
      // gcd is the right eliminant then.
      const KPoly rij = x_degree(forms[i]) == 0 && x_degree(forms[j]) == 0
                            ? gcd(in_y(forms[i]), in_y(forms[j]))
                            : affine_resultant_x(forms[i], forms[j]);
      if (!rij.is_zero()) r = gcd(r, rij);
    }
  if (r.is_zero()) {
    // Every pair shares a factor; try combinations brought to a common degree
    // by powers of a fixed line (extra zeros are filtered below).
    int top = 0;
    for (const auto& f : forms) top = std::max(top, f.degree());
    const TernaryForm ell = TernaryForm::from_linear(LinearForm{Scalar(1), Scalar(2), Scalar(3)});
    std::vector<TernaryForm> lifted;
    for (const auto& f : forms) lifted.push_back(f * ell.pow(top - f.degree()));
    for (int s = 1; s <= 6 && r.is_zero(); ++s) {
      TernaryForm g1(top), g2(top);
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        g1 += lifted[i].scaled(Scalar(static_cast<long>(i) + 1));
        g2 += lifted[i].scaled(Scalar(static_cast<long>((i + 1) * (i + 1)) + s));
      }
      r = affine_resultant_x(g1, g2);
    }
    if (r.is_zero()) throw InputError("the forms have infinitely many common zeros");
  }

  if (r.degree() >= 1) {
    std::vector<Scalar> ys;
    for (const auto& [phi, mult] : factor_over(acc, squarefree_part(r))) {
      (void)mult;
      if (phi.degree() == 1) {
        ys.push_back(-phi.coeff(0));
        continue;
      }
      const Adjunction adj = adjoin_root(acc, phi, max_degree);
      if (gcd_in_x(forms, adj.root, Scalar(1)).degree() < 1) continue;  // no x over this factor
      Splitting sp = split_completely(acc, phi, max_degree);
      acc = sp.field;
      ys.insert(ys.end(), sp.roots.begin(), sp.roots.end());
    }
    for (const auto& y0 : ys) {
      const KPoly h = gcd_in_x(forms, y0, Scalar(1));
      if (h.is_zero()) throw InputError("the forms share a line y = const");
      if (h.degree() < 1) continue;
      Splitting sp = split_completely(acc, h, max_degree);
      acc = sp.field;
      for (const auto& x0 : sp.roots) found.emplace_back(x0, y0, Scalar(1));
    }
  }

  std::vector<ProjPoint> out;
  for (const auto& p : found) {
    for (const auto& f : forms)
      if (!f.evaluate(p).is_zero()) throw InvariantViolation("solver produced a non-zero " + p.to_string());
    const ProjPoint q = lower_to_rationals(p);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CubicType t) {
  switch (t) {
    case CubicType::P: return "P";
    case CubicType::S: return "S";
    case CubicType::SPrime: return "S'";
    case CubicType::T: return "T";
    case CubicType::TPrime: return "T'";
    case CubicType::NC: return "NC";
    case CubicType::CC: return "CC";
    case CubicType::TL: return "TL";
    case CubicType::WL: return "WL";
    case CubicType::EC: return "EC";
  }
  return "?";
}

CubicType parse_cubic_type(const std::string& s) {
  for (CubicType t : {CubicType::P, CubicType::S, CubicType::SPrime, CubicType::T, CubicType::TPrime, CubicType::NC,
                      CubicType::CC, CubicType::TL, CubicType::WL, CubicType::EC})
    if (to_string(t) == s) return t;
  throw InputError("unknown cubic type '" + s + "'");
}

bool is_second_hessian_type(CubicType t) {
  return t == CubicType::T || t == CubicType::TPrime || t == CubicType::CC || t == CubicType::TL ||
         t == CubicType::WL;
}

std::string to_string(TangentCone c) {
  switch (c) {
    case TangentCone::DistinctPair: return "distinct-pair";
    case TangentCone::RepeatedLine: return "repeated-line";
    case TangentCone::TripleLines: return "triple-of-lines";
  }
  return "?";
}

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Line: return "line";
    case ComponentKind::Conic: return "conic";
    case ComponentKind::Cubic: return "cubic";
  }
  return "?";
}

// ---------------------------------------------------------------------------

BinaryParam canonical(const BinaryParam& p) {
  if (!p[1].is_zero()) return {p[0] / p[1], Scalar(1)};
  if (p[0].is_zero()) throw InvariantViolation("zero binary parameter");
  return infinite_param();
}

Parametrization Parametrization::line(const LinearForm& l) {
  if (l.is_zero()) throw InputError("zero linear form");
  Parametrization out;
  out.kind_ = Kind::Line;
  out.degree_ = 1;
  const auto basis = line_basis(l);
  for (int i = 0; i < 3; ++i) out.coords_[i] = KPoly(std::vector<Scalar>{basis[0][i], basis[1][i]});
  // Columns b1, b2 and a coordinate vector off the line; the inverse reads
  // off (w, u) from a point of the line.
  const Vec3 n = l.coeffs();
  const Vec3 off = unit(first_nonzero(n));
  Mat3 m(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i) {
    m[i][0] = basis[0][i];
    m[i][1] = basis[1][i];
    m[i][2] = off[i];
  }
  const Mat3 inv = inverse(m);
  out.dual_[0] = {inv[1][0], inv[1][1], inv[1][2]};
  out.dual_[1] = {inv[0][0], inv[0][1], inv[0][2]};
  return out;
}

Parametrization Parametrization::conic(const TernaryForm& q, const ProjPoint& base) {
  if (q.degree() != 2) throw InputError("not a conic: " + q.to_string());
  if (!q.evaluate(base).is_zero()) throw InputError("base point is not on the conic");
  Parametrization out;
  out.kind_ = Kind::Conic;
  out.degree_ = 2;
  out.center_ = base.coords();
  out.c_ = first_nonzero(out.center_);
  std::tie(out.a_, out.b_) = other_indices(out.c_);
  std::array<KPoly, 3> v;
  v[out.c_] = KPoly();
  v[out.a_] = KPoly::variable();
  v[out.b_] = KPoly::constant(Scalar(1));
  const Vec3 grad = gradient_at(q, out.center_);
  const KPoly qv = restrict_form(q, v);
  const KPoly s = v[out.a_].scaled(grad[out.a_]) + v[out.b_].scaled(grad[out.b_]);
  for (int i = 0; i < 3; ++i) out.coords_[i] = qv.scaled(out.center_[i]) - s * v[i];
  out.tangent_param_ = {grad[out.b_], -grad[out.a_], Scalar(0)};
  return out;
}

Parametrization Parametrization::singular_cubic(const TernaryForm& g, const ProjPoint& node) {
  if (g.degree() != 3) throw InputError("not a cubic: " + g.to_string());
  Parametrization out;
  out.kind_ = Kind::SingularCubic;
  out.degree_ = 3;
  out.center_ = node.coords();
  if (!is_zero(gradient_at(g, out.center_))) throw InputError("point is not singular on the cubic");
  out.c_ = first_nonzero(out.center_);
  std::tie(out.a_, out.b_) = other_indices(out.c_);
  std::array<KPoly, 3> v;
  v[out.c_] = KPoly();
  v[out.a_] = KPoly::constant(Scalar(1));
  v[out.b_] = KPoly::variable();
  TernaryForm polar(2);
  for (int i = 0; i < 3; ++i) polar += g.derivative(i).scaled(out.center_[i]);
  const KPoly q2 = restrict_form(polar, v);
  const KPoly gv = restrict_form(g, v);
  for (int i = 0; i < 3; ++i) out.coords_[i] = q2 * v[i] - gv.scaled(out.center_[i]);
  return out;
}

ProjPoint Parametrization::at(const BinaryParam& p) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    Scalar acc(0);
    for (int k = 0; k <= degree_; ++k) {
      const Scalar c = coords_[i].coeff(k);
      if (!c.is_zero()) acc += c * p[0].pow(k) * p[1].pow(degree_ - k);
    }
    r[i] = acc;
  }
  return ProjPoint(r);
}

std::optional<BinaryParam> Parametrization::preimage(const ProjPoint& q) const {
  const Vec3& x = q.coords();
  switch (kind_) {
    case Kind::Line:
      return canonical({dual_[0].evaluate(x), dual_[1].evaluate(x)});
    case Kind::Conic:
    case Kind::SingularCubic: {
      if (ProjPoint(center_) == q) {
        if (kind_ == Kind::SingularCubic) return std::nullopt;
        return canonical({tangent_param_[0], tangent_param_[1]});
      }
      const Scalar s = x[c_] / center_[c_];
      const Scalar va = x[a_] - s * center_[a_], vb = x[b_] - s * center_[b_];
      if (kind_ == Kind::Conic) return canonical({va, vb});
      return canonical({vb, va});
    }
  }
  return std::nullopt;
}

bool Parametrization::satisfies(const TernaryForm& equation) const {
  return restrict_form(equation, coords_).is_zero();
}

std::string Parametrization::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ", ";
    s += qplane::to_string(coords_[i], "t");
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

SingularLocus singular_locus(const TernaryForm& g, int max_degree) {
  if (g.is_zero()) throw InputError("zero form has no singular locus");
  std::vector<TernaryForm> partials;
  for (int i = 0; i < 3; ++i)
    if (!g.derivative(i).is_zero()) partials.push_back(g.derivative(i));
  SingularLocus out;
  TernaryForm common;
  for (const auto& p : partials) common = common.is_zero() ? p : gcd(common, p);
  if (common.degree() >= 1) {
    out.is_curve = true;
    return out;
  }
  for (const auto& p : common_zeros(partials, max_degree)) {
    SingularPoint sp{p, 2, TangentCone::DistinctPair, {}};
    const Vec3& v = p.coords();
    const Mat3 h = hessian_matrix_at(g, v);
    const int c = first_nonzero(v);
    const auto [a, b] = other_indices(c);
    switch (rank(h)) {
      case 0: {
        sp.multiplicity = 3;
        sp.cone = TangentCone::TripleLines;
        std::array<KPoly, 3> line;
        line[c] = KPoly();
        line[a] = KPoly::variable();
        line[b] = KPoly::constant(Scalar(1));
        sp.tangent_lines = lines_through(v, restrict_form(g, line), g.degree(), max_degree);
        break;
      }
      case 1: {
        sp.cone = TangentCone::RepeatedLine;
        for (const auto& row : h)
          if (!is_zero(Vec3{row[0], row[1], row[2]})) {
            sp.tangent_lines.push_back(LinearForm{row[0], row[1], row[2]}.normalized());
            break;
          }
        break;
      }
      default: {
        sp.cone = TangentCone::DistinctPair;
        const KPoly quad(std::vector<Scalar>{h[b][b], h[a][b] + h[b][a], h[a][a]});
        sp.tangent_lines = lines_through(v, quad, 2, max_degree);
        break;
      }
    }
    out.points.push_back(std::move(sp));
  }
  return out;
}

CubicClassification classify_cubic(const TernaryForm& g, int max_degree) {
  if (g.is_zero()) throw InputError("cannot classify the zero form");
  if (g.degree() != 3) throw InputError("not a cubic: " + g.to_string());
  CubicClassification out;
  out.cubic = g.normalized();
  const TernaryForm& f = out.cubic;

  const Radical rad = squarefree_radical(f);
  if (!rad.is_reduced) {
    if (rad.radical.degree() == 1) {
      out.type = CubicType::TL;
      out.components.push_back(line_component(line_of(rad.radical), 3));
      return out;
    }
    const auto doubled = divide_exact(f, rad.radical);
    if (!doubled || doubled->degree() != 1) throw InvariantViolation("non-reduced cubic without a double line");
    const auto simple = divide_exact(rad.radical, *doubled);
    if (!simple) throw InvariantViolation("radical does not contain the double line");
    out.type = CubicType::WL;
    out.components.push_back(line_component(line_of(*doubled), 2));
    out.components.push_back(line_component(line_of(*simple), 1));
    sort_components(out.components);
    return out;
  }

  SingularLocus locus = singular_locus(f, max_degree);
  if (locus.is_curve) throw InvariantViolation("reduced cubic with a singular curve");
  out.singular_points = locus.points;
  const auto& sing = out.singular_points;

  auto require_line = [&](const LinearForm& l) {
    const auto q = divide_by_linear(f, l);
    if (!q) throw InvariantViolation("expected line " + l.to_string() + " to divide " + f.to_string());
    return *q;
  };

  switch (sing.size()) {
    case 0: {
      out.type = CubicType::EC;
      bool hesse = true;
      for (const auto& [e, s] : f.terms()) {
        const bool cube = e[0] == 3 || e[1] == 3 || e[2] == 3;
        const bool mixed = e[0] == 1 && e[1] == 1 && e[2] == 1;
        if (!(cube && s.is_one()) && !mixed) hesse = false;
      }
      for (int i = 0; i < 3; ++i) {
        Exponent e{0, 0, 0};
        e[i] = 3;
        if (!f.coeff(e).is_one()) hesse = false;
      }
      if (hesse) out.hesse_lambda = -f.coeff({1, 1, 1});
      CurveComponent c;
      c.equation = f;
      c.kind = ComponentKind::Cubic;
      out.components.push_back(std::move(c));
      return out;
    }
    case 3: {
      out.type = CubicType::S;
      for (int i = 0; i < 3; ++i) {
        const auto& p = sing[(i + 1) % 3].point;
        const auto& q = sing[(i + 2) % 3].point;
        const LinearForm l = LinearForm::through(p.coords(), q.coords()).normalized();
        require_line(l);
        out.components.push_back(line_component(l, 1));
      }
      break;
    }
    case 2: {
      out.type = CubicType::SPrime;
      const LinearForm l = LinearForm::through(sing[0].point.coords(), sing[1].point.coords()).normalized();
      const TernaryForm conic = require_line(l);
      out.components.push_back(line_component(l, 1));
      out.components.push_back(conic_component(conic, sing));
      break;
    }
    case 1: {
      const SingularPoint& s = sing[0];
      if (s.multiplicity == 3) {
        out.type = CubicType::T;
        if (s.tangent_lines.size() != 3) throw InvariantViolation("triple point without three lines");
        for (const auto& l : s.tangent_lines) {
          require_line(l);
          out.components.push_back(line_component(l, 1));
        }
      } else if (s.cone == TangentCone::RepeatedLine) {
        const LinearForm& l = s.tangent_lines.at(0);
        if (const auto conic = divide_by_linear(f, l)) {
          out.type = CubicType::TPrime;
          out.components.push_back(line_component(l, 1));
          out.components.push_back(conic_component(*conic, sing));
        } else {
          out.type = CubicType::CC;
        }
      } else {
        for (const auto& l : s.tangent_lines)
          if (divide_by_linear(f, l)) throw InvariantViolation("nodal cubic with a line component");
        out.type = CubicType::NC;
      }
      if (out.type == CubicType::CC || out.type == CubicType::NC) {
        CurveComponent c;
        c.equation = f;
        c.kind = ComponentKind::Cubic;
        c.parametrization = Parametrization::singular_cubic(f, s.point);
        out.components.push_back(std::move(c));
      }
      break;
    }
    default:
      throw InvariantViolation("cubic with " + std::to_string(sing.size()) + " isolated singular points");
  }
  sort_components(out.components);
  return out;
}

std::vector<ProjPoint> inflection_points(const TernaryForm& g, int max_degree) {
  if (g.degree() != 3) throw InputError("not a cubic: " + g.to_string());
  const SingularLocus locus = singular_locus(g, max_degree);
  if (locus.is_curve || !locus.points.empty()) throw InputError("inflection points need a smooth cubic");
  return common_zeros({g, hessian(g)}, max_degree);
}

std::optional<ProjPoint> third_point(const TernaryForm& g, const ProjPoint& p, const ProjPoint& q) {
  if (g.degree() != 3) throw InputError("not a cubic: " + g.to_string());
  const Vec3& a = p.coords();
  Vec3 b = q.coords();
  if (p == q) {
    const Vec3 grad = gradient_at(g, a);
    if (is_zero(grad)) return std::nullopt;
    const auto basis = line_basis(LinearForm{grad[0], grad[1], grad[2]});
    b = proportional(basis[0], a) ? basis[1] : basis[0];
  }
  // c(u, w) = g(w a + u b) = c3 u^3 + c2 u^2 w + c1 u w^2 + c0 w^3.
  const Scalar c0 = g.evaluate(a), c3 = g.evaluate(b);
  const Scalar plus = g.evaluate(a + b) - c3 - c0;     // c2 + c1
  const Scalar minus = g.evaluate(b - a) - c3 + c0;    // c1 - c2
  const Scalar c1 = (plus + minus) / Scalar(2), c2 = (plus - minus) / Scalar(2);
  if (!c0.is_zero()) throw InputError(p.to_string() + " is not on the cubic");
  if (p == q) {
    // c = u^2 (c3 u + c2 w): the third root is (c2 : -c3).
    if (c2.is_zero() && c3.is_zero()) return std::nullopt;
    return ProjPoint(scale(a, -c3) + scale(b, c2));
  }
  if (!c3.is_zero()) throw InputError(q.to_string() + " is not on the cubic");
  if (c1.is_zero() && c2.is_zero()) return std::nullopt;
  return ProjPoint(scale(a, -c2) + scale(b, c1));
}

}  // namespace qplane
