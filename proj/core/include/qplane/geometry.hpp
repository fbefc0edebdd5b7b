#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "qplane/linalg.hpp"
#include "qplane/number_field.hpp"

namespace qplane {

using Vec3 = std::array<Scalar, 3>;
using Mat3 = Matrix<Scalar>;  // always 3x3 where this alias is used

Vec3 cross(const Vec3& a, const Vec3& b);
Scalar dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
bool proportional(const Vec3& a, const Vec3& b);  // both nonzero and parallel
Vec3 scale(const Vec3& v, const Scalar& s);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 apply(const Mat3& m, const Vec3& v);
FieldPtr field_of(const Vec3& v);

// Total order on scalars used only to make outputs deterministic.
bool canonical_less(const Scalar& a, const Scalar& b);

// A point of P^2. Stored with its first nonzero coordinate scaled to 1, so
// projective equality is coordinate equality.
class ProjPoint {
 public:
  ProjPoint(const Scalar& a, const Scalar& b, const Scalar& c);
  explicit ProjPoint(const Vec3& v);

  const Vec3& coords() const { return v_; }
  const Scalar& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  FieldPtr field() const { return field_of(v_); }
  ProjPoint in(const FieldPtr& f) const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

  std::string to_string() const;  // "(1, -1, 0)"

 private:
  Vec3 v_;
};

// The line a x + b y + c z = 0.
struct LinearForm {
  Scalar a, b, c;

  Vec3 coeffs() const { return {a, b, c}; }
  Scalar evaluate(const Vec3& p) const { return a * p[0] + b * p[1] + c * p[2]; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  // Scaled so the first nonzero coefficient is 1.
  LinearForm normalized() const;
  std::string to_string() const;

  static LinearForm through(const Vec3& p, const Vec3& q) {
    const Vec3 l = cross(p, q);
    return {l[0], l[1], l[2]};
  }
  friend bool operator==(const LinearForm& l, const LinearForm& m) {
    return l.a == m.a && l.b == m.b && l.c == m.c;
  }
};

// Two points spanning the line: null-space basis of the 1x3 row (a b c),
// the first pivot being the first nonzero coefficient.
std::array<Vec3, 2> line_basis(const LinearForm& l);

Mat3 mat3(const std::array<std::array<Scalar, 3>, 3>& rows);
std::string to_string(const Mat3& m);

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

}  // namespace qplane
