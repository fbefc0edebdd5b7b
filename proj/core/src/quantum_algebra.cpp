#include "qplane/quantum_algebra.hpp"

namespace qplane {

QuadraticAlgebra::QuadraticAlgebra(std::array<RelationTensor, 3> relations) : rel_(std::move(relations)) {
  Matrix<Scalar> rows(3, std::vector<Scalar>(9));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[k][3 * i + j] = rel_[k][i][j];
  if (rank(rows) != 3) throw InputError("relations are not linearly independent");
}

QuadraticAlgebra QuadraticAlgebra::from_strings(const std::array<std::string, 3>& relations,
                                                const DeclaredField* field) {
  const ParseContext ctx = xyz_context(field);
  std::array<RelationTensor, 3> rel;
  for (int k = 0; k < 3; ++k) {
    for (auto& row : rel[k]) row.fill(Scalar(0));
    const NCPoly p = parse_nc_polynomial(relations[k], ctx);
    for (const auto& [word, c] : p) {
      if (word.size() != 2) throw InputError("relation is not homogeneous quadratic: \"" + relations[k] + "\"");
      rel[k][word[0]][word[1]] = c;
    }
  }
  return QuadraticAlgebra(rel);
}

FieldPtr QuadraticAlgebra::field() const {
  std::vector<Scalar> all;
  for (const auto& t : rel_)
    for (const auto& row : t) all.insert(all.end(), row.begin(), row.end());
  return common_field(all);
}

Scalar QuadraticAlgebra::evaluate(int k, const Vec3& p, const Vec3& q) const {
  Scalar acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!rel_[k][i][j].is_zero()) acc += rel_[k][i][j] * p[i] * q[j];
  return acc;
}

std::string QuadraticAlgebra::relation_string(int k) const {
  static const char* names[3] = {"x", "y", "z"};
  // Print words in the order they appear in the relation tensor: commutator
  // pairs first (yz, zy, zx, xz, xy, yx) and then squares.
  static const int order[9][2] = {{1, 2}, {2, 1}, {2, 0}, {0, 2}, {0, 1}, {1, 0}, {0, 0}, {1, 1}, {2, 2}};
  std::string out;
  for (const auto& w : order) {
    const Scalar& c = rel_[k][w[0]][w[1]];
    if (c.is_zero()) continue;
    const std::string word = std::string(names[w[0]]) + "*" + names[w[1]];
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      const Rational r = c.rational_value();
      negative = sgn(r) < 0;
      if (abs(r) != 1) coeff = Rational(abs(r)).get_str() + "*";
    } else {
      coeff = "(" + c.to_string() + ")*";
    }
    const std::string term = coeff + word;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

MultilinearMatrix multilinearize(const QuadraticAlgebra& a) {
  MultilinearMatrix m;
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) m[k][j] = {a.relation(k)[0][j], a.relation(k)[1][j], a.relation(k)[2][j]};
  return m;
}

Mat3 evaluate(const MultilinearMatrix& m, const Vec3& p) {
  Mat3 r(3, std::vector<Scalar>(3));
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) r[k][j] = m[k][j].evaluate(p);
  return r;
}

PointScheme point_scheme(const QuadraticAlgebra& a) {
  const MultilinearMatrix m = multilinearize(a);
  TernaryForm e[3][3];
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) e[k][j] = TernaryForm::from_linear(m[k][j]);
  const TernaryForm det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                          e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                          e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
  PointScheme out;
  out.is_plane = det.is_zero();
  out.cubic = out.is_plane ? TernaryForm(3) : det.normalized();
  return out;
}

namespace {

std::optional<ProjPoint> kernel_point(const Mat3& m) {
  const auto basis = nullspace(m, 3);
  if (basis.size() != 1) return std::nullopt;
  return ProjPoint(basis[0][0], basis[0][1], basis[0][2]);
}

}  // namespace

std::optional<ProjPoint> sigma_eval(const QuadraticAlgebra& a, const PointScheme& e, const ProjPoint& p) {
  if (!e.is_plane && !e.cubic.evaluate(p).is_zero())
    throw InputError("point " + p.to_string() + " is not on the point scheme");
  const Mat3 m = evaluate(multilinearize(a), p.coords());
  const auto basis = nullspace(m, 3);
  if (basis.empty()) throw InvariantViolation("M(p) is invertible at a point of the point scheme");
  if (basis.size() != 1) return std::nullopt;
  return ProjPoint(basis[0][0], basis[0][1], basis[0][2]);
}

std::optional<ProjPoint> sigma_eval(const QuadraticAlgebra& a, const ProjPoint& p) {
  return sigma_eval(a, point_scheme(a), p);
}

std::optional<ProjPoint> sigma_inverse_eval(const QuadraticAlgebra& a, const ProjPoint& q) {
  // Row k, column i: sum_j c^k_ij q_j.
  Mat3 n(3, std::vector<Scalar>(3));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Scalar acc(0);
      for (int j = 0; j < 3; ++j) acc += a.relation(k)[i][j] * q[j];
      n[k][i] = acc;
    }
  return kernel_point(n);
}

GraphCheck verify_g1_graph(const QuadraticAlgebra& a, const std::vector<ProjPoint>& samples) {
  GraphCheck out;
  if (samples.empty()) return out;
  const PointScheme e = point_scheme(a);
  for (const auto& p : samples) {
    GraphWitness w{p, sigma_eval(a, e, p), {Scalar(0), Scalar(0), Scalar(0)}};
    if (w.image) {
      for (int k = 0; k < 3; ++k) {
        w.values[k] = a.evaluate(k, p.coords(), w.image->coords());
        if (!w.values[k].is_zero()) out.holds = false;
      }
    }
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

SymbolicGraphCheck verify_g1_symbolic(const QuadraticAlgebra& a, const TernaryForm& g,
                                      const std::array<TernaryForm, 3>& sigma) {
  SymbolicGraphCheck out;
  const int d = sigma[0].degree();
  for (int k = 0; k < 3; ++k) {
    TernaryForm prod(d + 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Scalar& c = a.relation(k)[i][j];
        if (c.is_zero()) continue;
        prod += (TernaryForm::variable(i) * sigma[j]).scaled(c);
      }
    out.products[k] = prod;
    if (g.is_zero()) {
      out.quotients[k] = TernaryForm(0);
      out.remainders[k] = prod;
    } else {
      auto div = divide_with_remainder(prod, g);
      out.quotients[k] = div.quotient;
      out.remainders[k] = div.remainder;
    }
    if (!out.remainders[k].is_zero()) out.holds = false;
  }
  return out;
}

}  // namespace qplane
