#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qplane/errors.hpp"
#include "qplane/rational.hpp"

namespace qplane {

namespace detail {
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

// Dense univariate polynomial over a field F, coefficients stored low to high.
// F is Rational or Scalar; it must provide field arithmetic, construction from
// int, and a free is_zero(const F&).
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }
  static Poly monomial(F c, int deg) {
    std::vector<F> v(static_cast<std::size_t>(deg) + 1, F(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0);
  }
  const F& lc() const {
    if (c_.empty()) throw InvariantViolation("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return Poly(std::move(r));
  }
  Poly monic() const { return is_zero() ? *this : scaled(F(1) / lc()); }

  Poly derivative() const {
    std::vector<F> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F(static_cast<int>(i)));
    return Poly(std::move(r));
  }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  // p(X + s)
  Poly shifted(const F& s) const {
    Poly acc;
    const Poly lin(std::vector<F>{s, F(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(F(1)), b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> r = a.coeffs();
  const int db = b.degree();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
  const F inv = F(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    F t = r[i] * inv;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b.coeffs()[j];
    q[i - db] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct Xgcd {
  Poly<F> g, s, t;  // g = s*a + t*b, g monic
};

template <class F>
Xgcd<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Exact quotient; throws when b does not divide a.
template <class F>
Poly<F> divide_exact(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
  return q;
}

// Monic squarefree part a / gcd(a, a').
template <class F>
Poly<F> squarefree_part(const Poly<F>& a) {
  if (a.degree() <= 0) return a.monic();
  return divide_exact(a, gcd(a, a.derivative())).monic();
}

template <class F>
bool is_squarefree(const Poly<F>& a) {
  return a.degree() <= 0 || gcd(a, a.derivative()).degree() == 0;
}

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  Poly<F> result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly<F> basis = Poly<F>::constant(F(1));
    F denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly<F>(std::vector<F>{-xs[j], F(1)});
      denom = denom * (xs[i] - xs[j]);
    }
    result += basis.scaled(ys[i] / denom);
  }
  return result;
}

using UPolyQ = Poly<Rational>;

// Renders with highest power first, e.g. "t^2 - 1/3*t + 2".
std::string to_string(const UPolyQ& p, std::string_view var = "t");

}  // namespace qplane
