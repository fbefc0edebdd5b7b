#include "qplane/field_ext.hpp"

#include <algorithm>

#include "qplane/factor_q.hpp"

namespace qplane {
namespace {

KPoly coerce(const KPoly& p, const FieldPtr& f) {
  std::vector<Scalar> c;
  for (const auto& s : p.coeffs()) c.push_back(s.in(f));
  return KPoly(std::move(c));
}

bool has_rational_coeffs(const KPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& s) { return s.is_rational(); });
}

UPolyQ to_upoly(const KPoly& p) {
  std::vector<Rational> c;
  for (const auto& s : p.coeffs()) c.push_back(s.rational_value());
  return UPolyQ(std::move(c));
}

// Shift sequence 0, 1, -1, 2, -2, ...
long shift_at(int i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

std::string generator_name(int degree) { return "a" + std::to_string(degree); }

bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& ca = a.coeffs()[i].coeffs();
    const auto& cb = b.coeffs()[i].coeffs();
    const std::size_t n = std::max(ca.size(), cb.size());
    for (std::size_t k = 0; k < n; ++k) {
      const Rational x = k < ca.size() ? ca[k] : Rational(0);
      const Rational y = k < cb.size() ? cb[k] : Rational(0);
      if (x != y) return x < y;
    }
  }
  return false;
}

// Irreducible factors of a monic squarefree q over `field`.
std::vector<KPoly> factor_squarefree_over(const FieldPtr& field, const KPoly& q) {
  if (q.degree() <= 1) return {q.monic()};
  if (!field) {
    std::vector<KPoly> out;
    for (const auto& f : factor_squarefree(to_upoly(q))) out.push_back(to_kpoly(f));
    return out;
  }
  const Scalar theta = Scalar::generator(field);
  for (int i = 0; i < 64; ++i) {
    const Scalar s(shift_at(i));
    const KPoly shifted = q.shifted(-(s * theta));
    const UPolyQ n = norm_poly(field, shifted);
    if (!is_squarefree(n)) continue;
    const auto parts = factor_squarefree(n);
    if (parts.size() == 1) return {q.monic()};
    std::vector<KPoly> out;
    int total = 0;
    for (const auto& part : parts) {
      KPoly g = gcd(shifted, to_kpoly(part));
      if (g.degree() <= 0) continue;
      total += g.degree();
      out.push_back(g.shifted(s * theta).monic());
    }
    if (total != q.degree()) throw InvariantViolation("norm-based factorization lost factors");
    return out;
  }
  throw InvariantViolation("no squarefree norm found for factorization");
}

}  // namespace

UPolyQ norm_poly(const FieldPtr& field, const KPoly& p) {
  if (!field || has_rational_coeffs(p)) {
    UPolyQ r = to_upoly(p);
    const int d = field ? field->degree() : 1;
    return r.pow(static_cast<unsigned>(d));
  }
  const int total = field->degree() * p.degree();
  std::vector<Rational> xs, ys;
  for (int j = 0; j <= total; ++j) {
    xs.emplace_back(j);
    ys.push_back(norm(p.eval(Scalar(j)).in(field)));
  }
  return interpolate(xs, ys);
}

std::vector<std::pair<KPoly, int>> factor_over(const FieldPtr& base, const KPoly& p) {
  if (p.degree() < 1) throw InputError("cannot factor a constant polynomial");
  const FieldPtr field = common_field(base, common_field(p.coeffs()));
  const KPoly kp = coerce(p, field);
  const KPoly sqf = squarefree_part(kp);
  std::vector<std::pair<KPoly, int>> out;
  for (auto& f : factor_squarefree_over(field, sqf)) {
    int mult = 0;
    KPoly rest = kp;
    for (;;) {
      auto [quot, rem] = divmod(rest, f);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++mult;
    }
    out.emplace_back(std::move(f), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return kpoly_less(a.first, b.first); });
  return out;
}

std::vector<Scalar> roots_in(const FieldPtr& field, const KPoly& p) {
  std::vector<Scalar> roots;
  for (const auto& [f, m] : factor_over(field, p))
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  return roots;
}

Adjunction adjoin_root(const FieldPtr& base, const KPoly& p, int max_degree) {
  if (p.degree() < 1) throw InputError("adjoin_root needs a polynomial of degree >= 1");
  const FieldPtr field = common_field(base, common_field(p.coeffs()));
  const auto factors = factor_over(field, p);
  for (const auto& [f, m] : factors)
    if (f.degree() == 1) return {field, (-f.coeff(0)).in(field)};

  const KPoly& q = factors.front().first;
  const int base_degree = field ? field->degree() : 1;
  const int new_degree = base_degree * q.degree();
  if (new_degree > max_degree)
    throw DegreeCapExceeded("field degree " + std::to_string(new_degree) + " exceeds cap " + std::to_string(max_degree));

  if (!field) {
    FieldPtr ext = NumberField::extend(generator_name(new_degree), to_upoly(q), nullptr, {});
    return {ext, Scalar::generator(ext)};
  }

  const Scalar theta = Scalar::generator(field);
  for (int i = 0; i < 64; ++i) {
    const long s = shift_at(i);
    // eta = beta + s*theta has minimal polynomial Norm(q(Y - s*theta)) when squarefree.
    const UPolyQ n = norm_poly(field, q.shifted(-(Scalar(s) * theta)));
    if (!is_squarefree(n)) continue;

    FieldPtr tmp = NumberField::extend(generator_name(new_degree), n, nullptr, {});
    const Scalar eta = Scalar::generator(tmp);
    // theta in tmp is the common root of m(Z) and q(eta - s Z).
    const KPoly m = to_kpoly(field->min_poly());
    const KPoly z = KPoly::variable();
    const KPoly lin = KPoly::constant(eta) - z.scaled(Scalar(s));
    KPoly qz;
    for (int j = q.degree(); j >= 0; --j) {
      const KPoly cj = to_kpoly(UPolyQ(q.coeff(j).in(field).coeffs()));
      qz = qz * lin + cj;
    }
    const KPoly g = gcd(m, qz);
    if (g.degree() != 1) throw InvariantViolation("primitive element recovery failed");
    const Scalar theta_tmp = (-g.coeff(0)).in(tmp);

    FieldPtr ext = NumberField::extend(generator_name(new_degree), n, field, theta_tmp.coeffs());
    const Scalar root = Scalar::generator(ext) - Scalar::from_coeffs(ext, theta_tmp.coeffs()) * Scalar(s);
    if (!coerce(q, ext).eval(root).is_zero()) throw InvariantViolation("adjoined root does not satisfy its polynomial");
    return {ext, root};
  }
  throw InvariantViolation("no primitive element found");
}

Splitting split_completely(const FieldPtr& base, const KPoly& p, int max_degree) {
  const FieldPtr field = common_field(base, common_field(p.coeffs()));
  if (p.degree() < 1) return {field, {}};
  Splitting out{field, {}};
  KPoly rest = squarefree_part(coerce(p, field));
  while (rest.degree() >= 1) {
    KPoly nonlinear = KPoly::constant(Scalar(1));
    KPoly first_nonlinear;
    for (const auto& [f, m] : factor_over(out.field, rest)) {
      if (f.degree() == 1) out.roots.push_back(-f.coeff(0));
      else {
        if (first_nonlinear.is_zero()) first_nonlinear = f;
        nonlinear *= f;
      }
    }
    if (first_nonlinear.is_zero()) break;
    Adjunction adj = adjoin_root(out.field, first_nonlinear, max_degree);
    out.field = adj.field;
    for (auto& r : out.roots) r = r.in(out.field);
    rest = coerce(nonlinear, out.field);
  }
  for (auto& r : out.roots) r = r.in(out.field);
  return out;
}

}  // namespace qplane
