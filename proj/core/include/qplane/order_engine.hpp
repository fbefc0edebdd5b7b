#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplane/cubic_classify.hpp"
#include "qplane/order_result.hpp"
#include "qplane/quantum_algebra.hpp"

namespace qplane {

// An element of PGL_3: an invertible matrix up to scale, stored with its first
// nonzero entry (row-major) equal to 1.
class ProjectiveMap {
 public:
  // Throws InputError for a singular matrix.
  explicit ProjectiveMap(Mat3 m);
  static ProjectiveMap identity();

  const Mat3& matrix() const { return m_; }
  ProjPoint apply(const ProjPoint& p) const;
  ProjectiveMap then(const ProjectiveMap& next) const;  // next after this
  ProjectiveMap pow(long n) const;                      // n >= 0
  bool is_identity() const;
  bool preserves(const TernaryForm& g) const;  // g(T x) is a multiple of g

  friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) { return a.m_ == b.m_; }
  friend bool operator!=(const ProjectiveMap& a, const ProjectiveMap& b) { return !(a == b); }

 private:
  Mat3 m_;
};

struct OrderCaps {
  long fit = 60;       // largest exponent tried by extension fitting
  long torsion = 200;  // largest multiple tried when ordering curve points
};

struct CurveSampleState {
  std::vector<ProjPoint> pool;
  std::size_t i = 0, j = 0;  // next chord to try
  long next_t = 1;           // next line tried when chords run dry
};

// The algebra together with its classified point scheme. Construction checks
// that the classification belongs to the algebra.
class SigmaSystem {
 public:
  SigmaSystem(QuadraticAlgebra a, CubicClassification cls);
  static SigmaSystem from_algebra(const QuadraticAlgebra& a);

  const QuadraticAlgebra& algebra() const { return a_; }
  const CubicClassification& classification() const { return cls_; }
  bool is_plane() const { return cls_.type == CubicType::P; }
  // E is reduced, so sigma is defined pointwise on a dense set.
  bool has_pointwise_sigma() const;

  std::optional<ProjPoint> sigma(const ProjPoint& p) const;
  // sigma^i(p) by repeated kernel extraction; nullopt if some step is undefined.
  std::optional<ProjPoint> sigma_power(const ProjPoint& p, long i) const;

  // `count` smooth points of each component (of P^2 for type P), skipping the
  // first `offset` usable ones. The sequence is deterministic: parameters run
  // through the primes 2, 3, 5, ...; an elliptic E is sampled by chords from a
  // few seed points.
  std::vector<ProjPoint> samples(std::size_t count, std::size_t offset = 0) const;

  // Index of the component containing a smooth point, or -1.
  int component_of(const ProjPoint& p) const;

 private:
  QuadraticAlgebra a_;
  CubicClassification cls_;
  PointScheme e_;
  mutable CurveSampleState curve_;  // elliptic samples, grown on demand
};

struct FitOptions {
  std::size_t per_component = 8;  // equations come from these samples ...
  std::size_t offset = 0;         // ... starting here; the next block re-verifies
};

// A projective map T with sigma^i = T on E, or nullopt when the fitted system
// is not one-dimensional, T is singular, fails on fresh samples, or does not
// preserve E.
std::optional<ProjectiveMap> fit_projective_extension(const SigmaSystem& s, long i, const FitOptions& opt = {});
std::optional<ProjectiveMap> fit_projective_extension(const QuadraticAlgebra& a, const CubicClassification& cls,
                                                      long i);

struct NormResult {
  OrderResult order;
  std::optional<ProjectiveMap> witness;  // present exactly for Exact
  std::string rule;                      // which rung of the decision ladder answered
  std::vector<long> tried;               // exponents where fitting was attempted, in order
};

NormResult sigma_norm(const SigmaSystem& s, const OrderCaps& caps = {});
NormResult sigma_norm(const QuadraticAlgebra& a, const CubicClassification& cls, const OrderCaps& caps = {});

struct SigmaOrderResult {
  OrderResult order;
  std::string rule;
};

// |sigma|: the least i with sigma^i the identity on E.
SigmaOrderResult sigma_order(const SigmaSystem& s, const OrderCaps& caps = {});
SigmaOrderResult sigma_order(const QuadraticAlgebra& a, const CubicClassification& cls, const OrderCaps& caps = {});

// Least n with T^n a scalar matrix; AdditiveUnipotent when T is not
// diagonalizable, NonRootOfUnity when an eigenvalue ratio has infinite order.
OrderResult projective_order(const ProjectiveMap& t);

struct WitnessCheck {
  bool agrees_on_fresh_points = false;
  bool preserves_e = false;
  bool divisors_fail = false;
  std::size_t points_checked = 0;
  bool ok() const { return agrees_on_fresh_points && preserves_e && divisors_fail; }
};

// Re-checks an Exact(n) answer with witness t on `fresh` points taken after
// the blocks used by fitting.
WitnessCheck check_witness(const SigmaSystem& s, long n, const ProjectiveMap& t, std::size_t fresh = 16);

}  // namespace qplane
