#include "qplane/factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace qplane {
namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over Z/p with a word-sized odd prime p.

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // low to high, trimmed

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  // Returns {quotient, remainder}.
  std::pair<ZpPoly, ZpPoly> divmod(ZpPoly a, const ZpPoly& b) const {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ZpPoly q(static_cast<std::size_t>(deg(a) - db) + 1, 0);
    const u64 inv_lc = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      if (!a[i]) continue;
      const u64 t = mul(a[i], inv_lc);
      q[i - db] = t;
      for (int j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(t, b[j]));
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
  }
  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const { return divmod(a, b).second; }
  ZpPoly monic(ZpPoly a) const {
    if (a.empty()) return a;
    const u64 i = inv(a.back());
    for (auto& c : a) c = mul(c, i);
    return a;
  }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Returns {g, s, t} with s*a + t*b = g monic.
  void xgcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& g, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ZpPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      ZpPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 i = inv(r0.back());
    for (auto& c : r0) c = mul(c, i);
    for (auto& c : s0) c = mul(c, i);
    for (auto& c : t0) c = mul(c, i);
    g = r0;
    s = s0;
    t = t0;
  }
  ZpPoly derivative(const ZpPoly& a) const {
    ZpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }
  // base^e mod m with a multiprecision exponent.
  ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& m) const {
    ZpPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ZpPoly, int>> distinct_degree(const Zp& F, ZpPoly f) {
  std::vector<std::pair<ZpPoly, int>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  for (int i = 1; 2 * i <= Zp::deg(f); ++i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    ZpPoly g = F.gcd(F.sub(h, x), f);
    if (Zp::deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (Zp::deg(f) > 0) out.emplace_back(f, Zp::deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const Zp& F, const ZpPoly& g, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  const int n = Zp::deg(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    Zp::trim(a);
    if (Zp::deg(a) < 1) continue;
    ZpPoly u = F.gcd(a, g);
    if (Zp::deg(u) <= 0) {
      ZpPoly b = F.sub(F.powmod(a, e, g), ZpPoly{1});
      u = F.gcd(b, g);
    }
    if (Zp::deg(u) > 0 && Zp::deg(u) < n) {
      equal_degree(F, u, d, rng, out);
      equal_degree(F, F.divmod(g, u).first, d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Polynomials over Z (and Z/M for Hensel lifting) with mpz coefficients.

using ZPoly = std::vector<Integer>;  // low to high, trimmed

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}
int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void reduce_mod(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (sgn(c) < 0) c += m;
  }
  trim(a);
}
void symmetric_mod(ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (sgn(c) < 0) c += m;
    if (c > half) c -= m;
  }
  trim(a);
}
ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}
ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}
ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}
ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = zmul(a, b);
  reduce_mod(r, m);
  return r;
}
// Division by a monic divisor modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  reduce_mod(a, m);
  const int db = deg(b);
  if (deg(a) < db) return {{}, a};
  ZPoly q(static_cast<std::size_t>(deg(a) - db) + 1);
  for (int i = deg(a); i >= db; --i) {
    Integer t = a[i] % m;
    if (sgn(t) < 0) t += m;
    if (sgn(t) == 0) continue;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  a.resize(static_cast<std::size_t>(db));
  reduce_mod(a, m);
  reduce_mod(q, m);
  return {q, a};
}

ZPoly from_zp(const ZpPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  trim(r);
  return r;
}
ZpPoly to_zp(const ZPoly& a, u64 p) {
  ZpPoly r;
  const Integer pp(static_cast<unsigned long>(p));
  for (const auto& c : a) {
    Integer v = c % pp;
    if (sgn(v) < 0) v += pp;
    r.push_back(v.get_ui());
  }
  Zp::trim(r);
  return r;
}

// One quadratic Hensel step (modulus m to m^2) for f = g*h with h monic and
// s*g + t*h = 1, following the classical two-factor lifting scheme.
void hensel_step(const Integer& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
  const Integer m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h));
  reduce_mod(e, m2);
  auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
  ZPoly g2 = zadd(g, zadd(zmul(t, e), zmul(q, g)));
  reduce_mod(g2, m2);
  ZPoly h2 = zadd(h, r);
  reduce_mod(h2, m2);

  ZPoly b = zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)});
  reduce_mod(b, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b), h2, m2);
  ZPoly s2 = zsub(s, d);
  reduce_mod(s2, m2);
  ZPoly t2 = zsub(t, zadd(zmul(t, b), zmul(c, g2)));
  reduce_mod(t2, m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts target = lc * prod(factors) (mod p) to monic factors modulo p^(2^steps).
void multifactor_lift(const Zp& F, const ZPoly& target, const std::vector<ZpPoly>& factors, int steps,
                      const Integer& modulus, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    ZPoly monic_target = target;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), target.back().get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : monic_target) c *= inv;
    reduce_mod(monic_target, modulus);
    out.push_back(monic_target);
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ZpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ZpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ZpPoly g0{to_zp(ZPoly{target.back()}, F.p)};
  for (const auto& u : left) g0 = F.mul(g0, u);
  ZpPoly h0{1};
  for (const auto& u : right) h0 = F.mul(h0, u);
  ZpPoly gg, s0, t0;
  F.xgcd(g0, h0, gg, s0, t0);

  ZPoly g = from_zp(g0), h = from_zp(h0), s = from_zp(s0), t = from_zp(t0);
  Integer m(static_cast<unsigned long>(F.p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(m, target, g, h, s, t);
    m *= m;
  }
  // g carries the leading coefficient of target; h is monic.
  multifactor_lift(F, g, left, steps, modulus, out);
  multifactor_lift(F, h, right, steps, modulus, out);
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primitive integer polynomial proportional to f.
ZPoly primitive_integer(const UPolyQ& f) {
  Integer den(1);
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f.coeffs()) r.push_back(Integer(c.get_num() * (den / c.get_den())));
  Integer cont(0);
  for (const auto& c : r) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
  if (sgn(r.back()) < 0) cont = -cont;
  for (auto& c : r) c /= cont;
  return r;
}

UPolyQ to_upoly(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& v : a) c.emplace_back(v);
  return UPolyQ(std::move(c)).monic();
}

ZPoly primitive_part(ZPoly a) {
  Integer cont(0);
  for (const auto& c : a) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
  if (sgn(a.back()) < 0) cont = -cont;
  for (auto& c : a) c /= cont;
  return a;
}

// Exact division test over Z; on success replaces f by the quotient.
bool divides_over_z(const ZPoly& g, ZPoly& f) {
  if (deg(g) > deg(f)) return false;
  ZPoly r = f;
  ZPoly q(static_cast<std::size_t>(deg(f) - deg(g)) + 1);
  for (int i = deg(f); i >= deg(g); --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) return false;
    Integer t = r[i] / g.back();
    q[i - deg(g)] = t;
    for (int j = 0; j <= deg(g); ++j) r[i - deg(g) + j] -= t * g[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  f = std::move(q);
  return true;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<UPolyQ> zassenhaus(const UPolyQ& f) {
  ZPoly F = primitive_integer(f);
  const int n = deg(F);
  const Integer lc = F.back();

  // Pick the prime with the fewest modular factors among a handful of candidates.
  Zp best{0};
  std::vector<std::pair<ZpPoly, int>> best_ddf;
  std::size_t best_count = 0;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    Zp Fp{p};
    ZpPoly fp = Fp.monic(to_zp(F, p));
    if (Zp::deg(Fp.gcd(fp, Fp.derivative(fp))) != 0) continue;
    auto ddf = distinct_degree(Fp, fp);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(Zp::deg(g) / d);
    ++tried;
    if (best.p == 0 || count < best_count) {
      best = Fp;
      best_ddf = std::move(ddf);
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count <= 1) return {f.monic()};

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<ZpPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(best, g, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Coefficient bound for factors scaled to leading coefficient lc.
  Integer norm2(0);
  for (const auto& c : F) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = 2 * abs(lc) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

  int steps = 0;
  Integer modulus(static_cast<unsigned long>(best.p));
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  multifactor_lift(best, F, modular, steps, modulus, lifted);

  // Subset recombination with exact trial division.
  std::vector<UPolyQ> result;
  std::vector<int> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  ZPoly current = F;
  int s = 1;
  while (2 * s <= static_cast<int>(remaining.size())) {
    bool found = false;
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly g{current.back()};
      for (int i : idx) g = zmul_mod(g, lifted[remaining[i]], modulus);
      symmetric_mod(g, modulus);
      if (g.empty()) continue;
      g = primitive_part(g);
      ZPoly quotient = current;
      if (divides_over_z(g, quotient)) {
        result.push_back(to_upoly(g));
        current = primitive_part(quotient);
        std::vector<int> rest;
        for (int k = 0; k < static_cast<int>(remaining.size()); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(remaining[k]);
        remaining = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, static_cast<int>(remaining.size())));
    if (!found) ++s;
  }
  if (deg(current) > 0) result.push_back(to_upoly(current));
  return result;
}

bool poly_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<UPolyQ> factor_squarefree(const UPolyQ& f) {
  if (f.degree() < 1) throw InvariantViolation("factor_squarefree needs degree >= 1");
  std::vector<UPolyQ> out;
  UPolyQ g = f.monic();
  // Strip rational roots at 0 cheaply.
  if (is_zero(g.coeff(0))) {
    out.push_back(UPolyQ::variable());
    g = divide_exact(g, UPolyQ::variable());
  }
  if (g.degree() == 1) out.push_back(g);
  else if (g.degree() > 1) {
    auto parts = zassenhaus(g);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

FactorizationQ factor(const UPolyQ& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  FactorizationQ result{f.lc(), {}};
  // Yun's squarefree decomposition.
  UPolyQ a = f.monic();
  if (a.degree() == 0) return result;
  UPolyQ b = a.derivative();
  UPolyQ c = gcd(a, b);
  UPolyQ w = divide_exact(a, c);
  UPolyQ y = divide_exact(b, c);
  int mult = 1;
  while (w.degree() > 0) {
    UPolyQ z = y - w.derivative();
    if (z.is_zero()) {
      if (w.degree() > 0)
        for (auto& p : factor_squarefree(w)) result.factors.emplace_back(std::move(p), mult);
      break;
    }
    UPolyQ g = gcd(w, z);
    if (g.degree() > 0)
      for (auto& p : factor_squarefree(g)) result.factors.emplace_back(std::move(p), mult);
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    ++mult;
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& l, const auto& r) { return poly_less(l.first, r.first); });
  return result;
}

bool is_irreducible(const UPolyQ& f) {
  if (f.degree() < 1) return false;
  if (!is_squarefree(f)) return false;
  return factor_squarefree(f).size() == 1;
}

}  // namespace qplane
