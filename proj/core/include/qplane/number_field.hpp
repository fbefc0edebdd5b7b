#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "qplane/order_result.hpp"
#include "qplane/poly.hpp"

namespace qplane {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

inline constexpr int kDefaultMaxFieldDegree = 48;

// Q(theta) with theta a root of an irreducible monic min_poly over Q. A field
// built by adjoining a root to an existing field K keeps a link to K together
// with the image of K's generator, so elements of K coerce into it; the
// arithmetic itself always runs in the flattened absolute power basis.
class NumberField {
 public:
  // Checks irreducibility over Q. Throws InputError for reducible or
  // degree-0 polynomials. A degree-1 polynomial yields nullptr (Q itself).
  static FieldPtr create(std::string generator, const UPolyQ& min_poly);

  // Trusted construction used by root adjunction; min_poly must already be
  // known to be irreducible. base_image expresses base's generator in the
  // new power basis.
  static FieldPtr extend(std::string generator, const UPolyQ& min_poly, FieldPtr base,
                         std::vector<Rational> base_image);

  const std::string& generator() const { return generator_; }
  const UPolyQ& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  const FieldPtr& base() const { return base_; }
  const std::vector<Rational>& base_image() const { return base_image_; }

  // Reduction of an arbitrary coefficient vector modulo min_poly.
  std::vector<Rational> reduce(std::vector<Rational> c) const;
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;

 private:
  NumberField(std::string generator, UPolyQ min_poly, FieldPtr base, std::vector<Rational> base_image);

  std::string generator_;
  UPolyQ min_poly_;
  FieldPtr base_;
  std::vector<Rational> base_image_;
  // power_table_[k] = theta^(d + k) reduced, for k = 0 .. d - 2.
  std::vector<std::vector<Rational>> power_table_;
};

// True when `ancestor` is reachable from `f` through base links (or is null,
// standing for Q, or equals f).
bool field_contains(const FieldPtr& f, const FieldPtr& ancestor);

// The smaller of two fields where one contains the other; throws
// InvariantViolation for unrelated fields.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// Exact element of a number field; a null field means Q. Arithmetic between
// elements of nested fields coerces into the larger one.
class Scalar {
 public:
  Scalar() : c_{Rational(0)} {}
  Scalar(int v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : c_{std::move(v)} {}  // NOLINT(google-explicit-constructor)

  static Scalar generator(const FieldPtr& f);
  static Scalar from_coeffs(const FieldPtr& f, std::vector<Rational> coeffs);

  const FieldPtr& field() const { return f_; }
  int field_degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Scalar inverse() const;
  Scalar pow(long e) const;

  // The same element viewed in a field containing this one.
  Scalar in(const FieldPtr& target) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "t^2 - 1/3*t + 2"; rationals print as "3/2".
  std::string to_string() const;
  // Like to_string, wrapped in parentheses when it has more than one term.
  std::string to_factor_string() const;

 private:
  FieldPtr f_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Common field of a list of scalars.
FieldPtr common_field(const std::vector<Scalar>& values);

// Field norm down to Q: determinant of multiplication by a.
Rational norm(const Scalar& a);

// Least n with a^n = 1, or CertifiedInfinite(NonRootOfUnity). Only n with
// Euler phi(n) <= [field : Q] can occur, so the search is finite.
OrderResult root_of_unity_order(const Scalar& a);

long euler_phi(long n);

using KPoly = Poly<Scalar>;

KPoly to_kpoly(const UPolyQ& p);
std::string to_string(const KPoly& p, std::string_view var = "X");

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qplane
