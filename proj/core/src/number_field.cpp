#include "qplane/number_field.hpp"

#include <numeric>

#include "qplane/factor_q.hpp"
#include "qplane/linalg.hpp"

namespace qplane {

NumberField::NumberField(std::string generator, UPolyQ min_poly, FieldPtr base, std::vector<Rational> base_image)
    : generator_(std::move(generator)),
      min_poly_(std::move(min_poly)),
      base_(std::move(base)),
      base_image_(std::move(base_image)) {
  const int d = degree();
  // theta^d = -(m_0 + m_1 theta + ... + m_{d-1} theta^{d-1})
  std::vector<Rational> row(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) row[i] = -min_poly_.coeff(i);
  for (int k = 0; k + 2 <= d; ++k) {
    power_table_.push_back(row);
    // multiply by theta
    std::vector<Rational> next(static_cast<std::size_t>(d));
    const Rational top = row[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = row[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] -= top * min_poly_.coeff(i);
    row = std::move(next);
  }
}

FieldPtr NumberField::create(std::string generator, const UPolyQ& min_poly) {
  if (min_poly.degree() < 1) throw InputError("field minimal polynomial must have degree >= 1");
  if (min_poly.degree() == 1) return nullptr;
  if (!is_irreducible(min_poly))
    throw InputError("minimal polynomial " + to_string(min_poly, generator) + " is reducible over Q");
  return FieldPtr(new NumberField(std::move(generator), min_poly.monic(), nullptr, {}));
}

FieldPtr NumberField::extend(std::string generator, const UPolyQ& min_poly, FieldPtr base,
                             std::vector<Rational> base_image) {
  if (min_poly.degree() < 2) throw InvariantViolation("extension must have degree >= 2");
  return FieldPtr(new NumberField(std::move(generator), min_poly.monic(), std::move(base), std::move(base_image)));
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> c) const {
  const int d = degree();
  if (static_cast<int>(c.size()) > 2 * d - 1) {
    UPolyQ r = UPolyQ(std::move(c)) % min_poly_;
    c = r.coeffs();
  } else {
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
      if (is_zero(c[i])) continue;
      const Rational a = c[i];
      const auto& row = power_table_[i - d];
      for (int j = 0; j < d; ++j) c[j] += a * row[j];
    }
  }
  c.resize(static_cast<std::size_t>(d));
  return c;
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  std::vector<Rational> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r));
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
  const auto x = xgcd(UPolyQ(a), min_poly_);
  if (x.g.degree() != 0) throw InvariantViolation("inverse of zero in number field");
  std::vector<Rational> r = x.s.coeffs();
  r.resize(static_cast<std::size_t>(degree()));
  return r;
}

bool field_contains(const FieldPtr& f, const FieldPtr& ancestor) {
  if (!ancestor) return true;
  for (const NumberField* cur = f.get(); cur; cur = cur->base().get())
    if (cur == ancestor.get()) return true;
  return false;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (field_contains(a, b)) return a;
  if (field_contains(b, a)) return b;
  throw InvariantViolation("scalars belong to unrelated number fields");
}

FieldPtr common_field(const std::vector<Scalar>& values) {
  FieldPtr f;
  for (const auto& v : values)
    if (!v.is_rational()) f = common_field(f, v.field());
  return f;
}

// ---------------------------------------------------------------------------

Scalar Scalar::generator(const FieldPtr& f) {
  if (!f) throw InvariantViolation("Q has no generator");
  std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
  c[1] = 1;
  Scalar s;
  s.f_ = f;
  s.c_ = std::move(c);
  return s;
}

Scalar Scalar::from_coeffs(const FieldPtr& f, std::vector<Rational> coeffs) {
  Scalar s;
  if (!f) {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (sgn(coeffs[i]) != 0) throw InvariantViolation("non-rational coefficients for Q");
    s.c_ = {coeffs.empty() ? Rational(0) : coeffs[0]};
    return s;
  }
  s.f_ = f;
  s.c_ = f->reduce(std::move(coeffs));
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && c_[0] == 1; }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw InvariantViolation("scalar is not rational: " + to_string());
  return c_[0];
}

Scalar Scalar::in(const FieldPtr& target) const {
  if (f_ == target) return *this;
  if (is_rational()) return from_coeffs(target, {c_[0]});
  if (!field_contains(target, f_)) throw InvariantViolation("cannot embed scalar into an unrelated field");
  const Scalar lower = in(target->base());
  const Scalar theta = from_coeffs(target, target->base_image());
  Scalar acc = from_coeffs(target, {Rational(0)});
  for (auto it = lower.c_.rbegin(); it != lower.c_.rend(); ++it) acc = acc * theta + Scalar(*it);
  return acc;
}

namespace {

// Field for a binary operation. A rational operand fits in any field, so it
// never forces a relation between otherwise unrelated fields.
FieldPtr join(const Scalar& a, const Scalar& b) {
  if (field_contains(a.field(), b.field())) return a.field();
  if (field_contains(b.field(), a.field())) return b.field();
  if (a.is_rational()) return b.field();
  if (b.is_rational()) return a.field();
  throw InvariantViolation("scalars belong to unrelated number fields");
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) {
    const FieldPtr f = join(a, b);
    return a.in(f) + b.in(f);
  }
  std::vector<Rational> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  Scalar r;
  r.f_ = a.f_;
  r.c_ = std::move(c);
  return r;
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) {
    const FieldPtr f = join(a, b);
    return a.in(f) * b.in(f);
  }
  if (b.is_rational() || a.is_rational()) {
    const bool b_rat = b.is_rational();
    Scalar r = b_rat ? a : b;
    const Rational k = b_rat ? b.c_[0] : a.c_[0];
    for (auto& c : r.c_) c *= k;
    return r;
  }
  Scalar r;
  r.f_ = a.f_;
  r.c_ = a.f_->multiply(a.c_, b.c_);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvariantViolation("division by zero scalar");
  if (is_rational()) {
    Scalar r = *this;
    r.c_.assign(c_.size(), Rational(0));
    r.c_[0] = 1 / c_[0];
    return r;
  }
  Scalar r;
  r.f_ = f_;
  r.c_ = f_->inverse(c_);
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  if (a.is_rational() || b.is_rational()) return false;
  const FieldPtr f = join(a, b);
  return a.in(f).c_ == b.in(f).c_;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::from_coeffs(f_, {Rational(1)});
  Scalar b = *this;
  while (e) {
    if (e & 1L) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::vector<Rational> c = c_;
  return qplane::to_string(UPolyQ(std::move(c)), f_->generator());
}

std::string Scalar::to_factor_string() const {
  const std::string s = to_string();
  int terms = 0;
  for (const auto& c : c_)
    if (sgn(c) != 0) ++terms;
  return terms > 1 ? "(" + s + ")" : s;
}

Rational norm(const Scalar& a) {
  if (a.is_rational() && !a.field()) return a.coeffs()[0];
  const FieldPtr& f = a.field();
  const int d = f->degree();
  Matrix<Rational> m = zero_matrix<Rational>(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  std::vector<Rational> basis(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), Rational(0));
    basis[j] = 1;
    const auto col = f->multiply(a.coeffs(), basis);
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return determinant(m);
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

OrderResult root_of_unity_order(const Scalar& a) {
  if (a.is_zero()) throw InputError("root_of_unity_order of zero");
  if (a.is_rational()) {
    const Rational v = a.rational_value();
    if (v == 1) return OrderResult::exact(1);
    if (v == -1) return OrderResult::exact(2);
    return OrderResult::infinite(InfinityReason::NonRootOfUnity);
  }
  if (abs(norm(a)) != 1) return OrderResult::infinite(InfinityReason::NonRootOfUnity);
  const long d = a.field_degree();
  // phi(n) >= sqrt(n / 2) for every n, so phi(n) <= d forces n <= 2 d^2.
  const long limit = 2 * d * d;
  Scalar power = a;
  for (long n = 1; n <= limit; ++n) {
    if (n > 1) power = power * a;
    if (euler_phi(n) <= d && power.is_one()) return OrderResult::exact(n);
  }
  return OrderResult::infinite(InfinityReason::NonRootOfUnity);
}

KPoly to_kpoly(const UPolyQ& p) {
  std::vector<Scalar> c;
  for (const auto& r : p.coeffs()) c.emplace_back(r);
  return KPoly(std::move(c));
}

std::string to_string(const KPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Scalar c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const bool negative = c.is_rational() && sgn(c.rational_value()) < 0;
    if (negative && !out.empty()) c = -c;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative && i > 0 && (-c).is_one()) {
      out += "-";
      c = -c;
    }
    std::string mono = i == 0 ? "" : std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) out += c.to_factor_string();
    else if (c.is_one()) out += mono;
    else out += c.to_factor_string() + "*" + mono;
  }
  return out;
}

}  // namespace qplane
