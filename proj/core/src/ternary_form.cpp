#include "qplane/ternary_form.hpp"

#include <algorithm>
#include <vector>

namespace qplane {

TernaryForm TernaryForm::constant(const Scalar& c) {
  TernaryForm f(0);
  f.add_term({0, 0, 0}, c);
  return f;
}

TernaryForm TernaryForm::variable(int index) {
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(Scalar(1), e);
}

TernaryForm TernaryForm::monomial(const Scalar& c, const Exponent& e) {
  TernaryForm f(e[0] + e[1] + e[2]);
  f.add_term(e, c);
  return f;
}

TernaryForm TernaryForm::from_linear(const LinearForm& l) {
  TernaryForm f(1);
  f.add_term({1, 0, 0}, l.a);
  f.add_term({0, 1, 0}, l.b);
  f.add_term({0, 0, 1}, l.c);
  return f;
}

Scalar TernaryForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::pair<Exponent, Scalar> TernaryForm::leading_term() const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero form");
  return *terms_.begin();
}

FieldPtr TernaryForm::field() const {
  FieldPtr f;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) f = common_field(f, c.field());
  return f;
}

void TernaryForm::add_term(const Exponent& e, const Scalar& c) {
  const int d = e[0] + e[1] + e[2];
  if (terms_.empty() && d != degree_) degree_ = d;
  if (d != degree_) throw InvariantViolation("inhomogeneous term added to a form");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.degree_ != degree_) throw InvariantViolation("adding forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) { return *this += -o; }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TernaryForm TernaryForm::scaled(const Scalar& s) const {
  TernaryForm r(degree_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

TernaryForm TernaryForm::pow(int e) const {
  TernaryForm r = constant(Scalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TernaryForm TernaryForm::derivative(int var) const {
  TernaryForm r(std::max(degree_ - 1, 0));
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * Scalar(e[var]));
  }
  return r;
}

Scalar TernaryForm::evaluate(const Vec3& p) const {
  Scalar acc(0);
  std::array<std::vector<Scalar>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(Scalar(1));
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * p[i]);
  }
  for (const auto& [e, c] : terms_) acc += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
  return acc;
}

TernaryForm TernaryForm::substitute(const std::array<TernaryForm, 3>& images) const {
  std::array<std::vector<TernaryForm>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(constant(Scalar(1)));
    for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  const int out_degree = degree_ * images[0].degree();
  TernaryForm r(out_degree);
  for (const auto& [e, c] : terms_) r += (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).scaled(c);
  return r;
}

TernaryForm TernaryForm::compose(const Mat3& t) const {
  std::array<TernaryForm, 3> rows;
  for (int i = 0; i < 3; ++i) rows[i] = from_linear({t[i][0], t[i][1], t[i][2]});
  return substitute(rows);
}

TernaryForm TernaryForm::normalized() const {
  if (is_zero()) return *this;
  return scaled(leading_term().second.inverse());
}

TernaryForm TernaryForm::in(const FieldPtr& f) const {
  TernaryForm r(degree_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.in(f));
  return r;
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string TernaryForm::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      const Rational r = c.rational_value();
      negative = sgn(r) < 0;
      const Rational mag = abs(r);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = c.to_factor_string();
    }
    std::string term = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

bool proportional(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return a.normalized() == b.normalized();
}

TernaryForm hessian(const TernaryForm& f) {
  if (f.degree() < 2) throw InputError("hessian needs a form of degree >= 2");
  std::array<std::array<TernaryForm, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  const TernaryForm m0 = h[1][1] * h[2][2] - h[1][2] * h[2][1];
  const TernaryForm m1 = h[1][0] * h[2][2] - h[1][2] * h[2][0];
  const TernaryForm m2 = h[1][0] * h[2][1] - h[1][1] * h[2][0];
  TernaryForm det = h[0][0] * m0 - h[0][1] * m1 + h[0][2] * m2;
  if (det.is_zero()) det = TernaryForm(3 * (f.degree() - 2));
  return det;
}

bool second_hessian_is_zero(const TernaryForm& f) {
  if (f.degree() != 3) throw InputError("second_hessian_is_zero expects a cubic");
  const TernaryForm h = hessian(f);
  if (h.is_zero()) return true;
  return hessian(h).is_zero();
}

namespace {

bool divides_monomial(const Exponent& a, const Exponent& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

Exponent sub(const Exponent& a, const Exponent& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace

std::optional<TernaryForm> divide_exact(const TernaryForm& f, const TernaryForm& g) {
  if (g.is_zero()) throw InvariantViolation("division by the zero form");
  if (f.is_zero()) return TernaryForm(std::max(f.degree() - g.degree(), 0));
  if (f.degree() < g.degree()) return std::nullopt;
  const auto [eg, cg] = g.leading_term();
  const Scalar inv = cg.inverse();
  TernaryForm q(f.degree() - g.degree());
  TernaryForm r = f;
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading_term();
    if (!divides_monomial(eg, er)) return std::nullopt;
    const TernaryForm t = TernaryForm::monomial(cr * inv, sub(er, eg));
    q += t;
    r -= t * g;
  }
  return q;
}

FormDivision divide_with_remainder(const TernaryForm& f, const TernaryForm& g) {
  if (g.is_zero()) throw InvariantViolation("division by the zero form");
  const auto [eg, cg] = g.leading_term();
  const Scalar inv = cg.inverse();
  FormDivision out{TernaryForm(std::max(f.degree() - g.degree(), 0)), TernaryForm(f.degree())};
  TernaryForm r = f;
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading_term();
    if (divides_monomial(eg, er)) {
      const TernaryForm t = TernaryForm::monomial(cr * inv, sub(er, eg));
      out.quotient += t;
      r -= t * g;
    } else {
      const TernaryForm t = TernaryForm::monomial(cr, er);
      out.remainder += t;
      r -= t;
    }
  }
  return out;
}

std::optional<TernaryForm> divide_by_linear(const TernaryForm& f, const LinearForm& l) {
  if (l.is_zero()) throw InputError("divide_by_linear: zero linear form");
  // The restriction of f to the line must vanish identically: check it at
  // deg f + 1 points of the line b1 + t b2.
  const auto basis = line_basis(l);
  for (int t = 0; t <= f.degree(); ++t)
    if (!f.evaluate(basis[0] + scale(basis[1], Scalar(t))).is_zero()) return std::nullopt;
  return divide_exact(f, TernaryForm::from_linear(l));
}

LinearForm to_linear(const TernaryForm& f) {
  if (f.degree() != 1) throw InvariantViolation("to_linear expects a degree-1 form");
  return {f.coeff({1, 0, 0}), f.coeff({0, 1, 0}), f.coeff({0, 0, 1})};
}

// ---------------------------------------------------------------------------
// gcd through the dehomogenization z = 1 and a primitive remainder sequence in
// K[y][x].

namespace {

using BiPoly = std::vector<KPoly>;  // index = power of x, coefficient in K[y]

void bi_trim(BiPoly& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

int bi_deg(const BiPoly& b) { return static_cast<int>(b.size()) - 1; }

BiPoly to_bipoly(const TernaryForm& f) {
  BiPoly b;
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<int>(b.size()) <= e[0]) b.resize(static_cast<std::size_t>(e[0]) + 1);
    b[e[0]] += KPoly::monomial(c, e[1]);
  }
  bi_trim(b);
  return b;
}

TernaryForm from_bipoly(const BiPoly& b) {
  int degree = 0;
  for (int a = 0; a <= bi_deg(b); ++a)
    if (!b[a].is_zero()) degree = std::max(degree, a + b[a].degree());
  TernaryForm f(degree);
  for (int a = 0; a <= bi_deg(b); ++a)
    for (int k = 0; k <= b[a].degree(); ++k) f.add_term({a, k, degree - a - k}, b[a].coeff(k));
  return f;
}

KPoly bi_content(const BiPoly& b) {
  KPoly c;
  for (const auto& p : b) c = gcd(c, p);
  return c;
}

BiPoly bi_div_content(const BiPoly& b, const KPoly& c) {
  BiPoly r;
  for (const auto& p : b) r.push_back(divide_exact(p, c));
  bi_trim(r);
  return r;
}

BiPoly bi_primitive(const BiPoly& b) { return b.empty() ? b : bi_div_content(b, bi_content(b)); }

// Pseudo-remainder of a by b in x.
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  const int db = bi_deg(b);
  const KPoly& lb = b.back();
  while (!a.empty() && bi_deg(a) >= db) {
    const KPoly la = a.back();
    const int shift = bi_deg(a) - db;
    for (auto& p : a) p *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    bi_trim(a);
  }
  return a;
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  const KPoly ca = bi_content(a), cb = bi_content(b);
  const KPoly c = gcd(ca, cb);
  a = bi_div_content(a, ca);
  b = bi_div_content(b, cb);
  if (bi_deg(a) < bi_deg(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = bi_prem(a, b);
    a = std::move(b);
    b = bi_primitive(r);
  }
  for (auto& p : a) p *= c;
  return a;
}

int min_z_power(const TernaryForm& f) {
  int k = f.degree();
  for (const auto& [e, c] : f.terms()) k = std::min(k, e[2]);
  return k;
}

TernaryForm strip_z(const TernaryForm& f, int k) {
  TernaryForm r(f.degree() - k);
  for (const auto& [e, c] : f.terms()) r.add_term({e[0], e[1], e[2] - k}, c);
  return r;
}

}  // namespace

TernaryForm gcd(const TernaryForm& f, const TernaryForm& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  const int kf = min_z_power(f), kg = min_z_power(g);
  const BiPoly b = bi_gcd(to_bipoly(strip_z(f, kf)), to_bipoly(strip_z(g, kg)));
  TernaryForm r = from_bipoly(b);
  const int kz = std::min(kf, kg);
  if (kz > 0) r = r * TernaryForm::monomial(Scalar(1), {0, 0, kz});
  return r.normalized();
}

Radical squarefree_radical(const TernaryForm& f) {
  if (f.is_zero()) throw InputError("squarefree_radical of the zero form");
  if (f.degree() == 0) return {f.normalized(), true};
  const TernaryForm g = gcd(gcd(f.derivative(0), f.derivative(1)), f.derivative(2));
  auto q = divide_exact(f, g);
  if (!q) throw InvariantViolation("gcd of partials does not divide the form");
  return {q->normalized(), g.degree() == 0};
}

}  // namespace qplane
