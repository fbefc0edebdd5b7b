#pragma once

#include <array>
#include <ostream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qplane/geometry.hpp"

namespace qplane {

using Exponent = std::array<int, 3>;

// Graded lexicographic order with x > y > z; the map below iterates from the
// leading monomial downwards.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

// Homogeneous polynomial in x, y, z over Scalar. Zero coefficients are never
// stored; the zero form still remembers its degree.
class TernaryForm {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexDescending>;

  TernaryForm() = default;
  explicit TernaryForm(int degree) : degree_(degree) {}

  static TernaryForm constant(const Scalar& c);
  static TernaryForm variable(int index);  // 0 = x, 1 = y, 2 = z
  static TernaryForm monomial(const Scalar& c, const Exponent& e);
  static TernaryForm from_linear(const LinearForm& l);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const Exponent& e) const;
  std::pair<Exponent, Scalar> leading_term() const;
  FieldPtr field() const;

  // Adds c * x^e, which must have this form's degree (or this form is zero of degree 0).
  void add_term(const Exponent& e, const Scalar& c);

  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator-(const TernaryForm& a) { return a.scaled(Scalar(-1)); }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  TernaryForm scaled(const Scalar& s) const;
  TernaryForm pow(int e) const;

  TernaryForm derivative(int var) const;
  Scalar evaluate(const Vec3& p) const;
  Scalar evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }

  // The form v -> f(T v).
  TernaryForm compose(const Mat3& t) const;
  // Substitutes x, y, z by the given forms (all of one degree).
  TernaryForm substitute(const std::array<TernaryForm, 3>& images) const;

  // Divided by the coefficient of the leading monomial.
  TernaryForm normalized() const;
  TernaryForm in(const FieldPtr& f) const;

  friend bool operator==(const TernaryForm& a, const TernaryForm& b);
  friend bool operator!=(const TernaryForm& a, const TernaryForm& b) { return !(a == b); }

  // "x^3 - y^2*z", "(t - 1)*x*y*z"; the zero form prints as "0".
  std::string to_string() const;

 private:
  int degree_ = 0;
  Terms terms_;
};

// Equal up to a nonzero scalar (both nonzero).
bool proportional(const TernaryForm& a, const TernaryForm& b);

// det of the matrix of second partials. Throws InputError for degree < 2.
TernaryForm hessian(const TernaryForm& f);

// hessian(hessian(f)) == 0. Throws InputError unless f is a cubic.
bool second_hessian_is_zero(const TernaryForm& f);

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<TernaryForm> divide_exact(const TernaryForm& f, const TernaryForm& g);

struct FormDivision {
  TernaryForm quotient;
  TernaryForm remainder;  // no term divisible by the leading monomial of g
};
FormDivision divide_with_remainder(const TernaryForm& f, const TernaryForm& g);

// Quotient f / l when l divides f. Throws InputError for the zero form.
std::optional<TernaryForm> divide_by_linear(const TernaryForm& f, const LinearForm& l);

// Normalized gcd; gcd(0, g) = normalized g.
TernaryForm gcd(const TernaryForm& f, const TernaryForm& g);

struct Radical {
  TernaryForm radical;  // normalized
  bool is_reduced;
};
Radical squarefree_radical(const TernaryForm& f);

// Linear form a x + b y + c z from a degree-1 TernaryForm.
LinearForm to_linear(const TernaryForm& f);

inline std::ostream& operator<<(std::ostream& os, const TernaryForm& f) { return os << f.to_string(); }

}  // namespace qplane
