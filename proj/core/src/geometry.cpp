#include "qplane/geometry.hpp"

namespace qplane {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool proportional(const Vec3& a, const Vec3& b) { return !is_zero(a) && !is_zero(b) && is_zero(cross(a, b)); }

Vec3 scale(const Vec3& v, const Scalar& s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 apply(const Mat3& m, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

FieldPtr field_of(const Vec3& v) { return common_field(std::vector<Scalar>(v.begin(), v.end())); }

bool canonical_less(const Scalar& a, const Scalar& b) {
  const FieldPtr f = common_field(std::vector<Scalar>{a, b});
  const std::vector<Rational> ca = a.in(f).coeffs();
  const std::vector<Rational> cb = b.in(f).coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

ProjPoint::ProjPoint(const Scalar& a, const Scalar& b, const Scalar& c) : ProjPoint(Vec3{a, b, c}) {}

ProjPoint::ProjPoint(const Vec3& v) {
  if (is_zero(v)) throw InputError("the zero vector is not a projective point");
  const FieldPtr f = field_of(v);
  int lead = 0;
  while (v[lead].is_zero()) ++lead;
  const Scalar inv = v[lead].inverse();
  for (int i = 0; i < 3; ++i) v_[i] = (v[i] * inv).in(f);
}

ProjPoint ProjPoint::in(const FieldPtr& f) const { return ProjPoint(v_[0].in(f), v_[1].in(f), v_[2].in(f)); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (int i = 0; i < 3; ++i) {
    if (canonical_less(a.v_[i], b.v_[i])) return true;
    if (canonical_less(b.v_[i], a.v_[i])) return false;
  }
  return false;
}

std::string ProjPoint::to_string() const {
  return "(" + v_[0].to_string() + ", " + v_[1].to_string() + ", " + v_[2].to_string() + ")";
}

LinearForm LinearForm::normalized() const {
  const Vec3 v = coeffs();
  int lead = 0;
  while (lead < 3 && v[lead].is_zero()) ++lead;
  if (lead == 3) throw InputError("zero linear form");
  const Scalar inv = v[lead].inverse();
  return {a * inv, b * inv, c * inv};
}

std::string LinearForm::to_string() const {
  static const char* names[3] = {"x", "y", "z"};
  const Vec3 v = coeffs();
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    std::string term;
    bool negative = false;
    if (v[i].is_rational()) {
      Rational r = v[i].rational_value();
      negative = sgn(r) < 0;
      r = abs(r);
      term = r == 1 ? names[i] : r.get_str() + "*" + names[i];
    } else {
      term = v[i].to_factor_string() + "*" + names[i];
    }
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::array<Vec3, 2> line_basis(const LinearForm& l) {
  if (l.is_zero()) throw InputError("zero linear form has no line");
  Matrix<Scalar> row{{l.a, l.b, l.c}};
  const auto basis = nullspace(row, 3);
  return {Vec3{basis[0][0], basis[0][1], basis[0][2]}, Vec3{basis[1][0], basis[1][1], basis[1][2]}};
}

Mat3 mat3(const std::array<std::array<Scalar, 3>, 3>& rows) {
  Mat3 m(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = rows[i][j];
  return m;
}

std::string to_string(const Mat3& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace qplane
