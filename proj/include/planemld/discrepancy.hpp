#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "planemld/newton.hpp"
#include "planemld/poly.hpp"
#include "planemld/scalar.hpp"

#include "json.hpp"

namespace planemld {

/// Strictly positive integer pair naming the toric divisor E_p obtained by
/// the (p1, p2)-weighted blow up; k_{E_p} = p1 + p2 - 1.
struct WeightVector {
  long long p1 = 1;
  long long p2 = 1;

  long long k() const { return p1 + p2 - 1; }
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// A formal product a_1^{e_1} ... a_s^{e_s} of monomial ideals with strictly
/// positive exponents, evaluated only through weighted sums of valuations.
struct MultiIdeal {
  std::vector<std::pair<MonomialIdeal, ExactScalar>> pairs;

  static MultiIdeal of(std::vector<std::pair<MonomialIdeal, ExactScalar>> p);
};

struct MldCertificate {
  struct RayValue {
    Ray ray;
    ExactScalar a;
  };
  struct CandidateValue {
    WeightVector p;
    ExactScalar a;
  };
  std::vector<RayValue> ray_values;
  std::vector<CandidateValue> candidates;  // finite case
  std::optional<Ray> negative_ray;         // minus-infinity case
};

struct MldResult {
  bool finite = false;
  ExactScalar value;  // meaningful when finite
  WeightVector divisor;
  MldCertificate certificate;
  bool upper_bound_only = false;  // set by monomialized_upper_bound

  bool is_minus_infinity() const { return !finite; }
};

/// Order on mld values with MinusInfinity below every finite value.
bool result_value_less(const MldResult& lhs, const MldResult& rhs);

struct LctResult {
  bool bounded = false;
  ExactScalar value;  // meaningful when bounded
  Ray computing_ray;
  bool exceptional = false;  // false when the ray is an axis
};

/// a(E_p) = p1 + p2 - sum_i e_i <p, Gamma(a_i)>. Rays (axis vectors) are
/// allowed for homogeneous analysis; only p >= (1,1) names a divisor with
/// center the origin. Throws on the zero vector.
ExactScalar log_discrepancy(long long p1, long long p2, const MultiIdeal& M);

/// p-weighted order of the ideal: support_value of its polygon.
long long valuation(const WeightVector& p, const MonomialIdeal& I);

/// The Newton-polygon minimum over all weight vectors p >= (1,1), certified
/// by the refined fan: negative on some ray means minus infinity; otherwise
/// the minimum is attained on {(1,1)} plus the Hilbert-basis points of the
/// fan's cones.
MldResult mld(const MultiIdeal& M);

/// The p >= (1,1) with a(p) < 0 minimizing k = p1+p2-1, ties by smaller p1.
/// Throws std::logic_error if the multiideal is log canonical.
WeightVector minus_infinity_witness(const MultiIdeal& M);

/// Minimal-k divisor computing the mld (finite or minus infinity).
WeightVector min_k_computing_divisor(const MultiIdeal& M);

/// Ray formula over the refined fan, axis rays included (they name the
/// non-exceptional coordinate-axis divisors, k = 0). Zero-denominator rays
/// are skipped; all-zero denominators yield Unbounded.
LctResult lct(const MultiIdeal& M);

/// Checks that scaling all exponents by t = lct(M) gives a log canonical
/// multiideal (mld >= 0) and that every slightly larger t' = t(1 + 1/k),
/// k in {1..5}, gives minus infinity. Throws if lct is unbounded or zero.
bool lct_mld_consistency(const MultiIdeal& M);

struct PolyMultiIdeal {
  std::vector<std::pair<PolynomialIdeal, ExactScalar>> pairs;

  static PolyMultiIdeal of(std::vector<std::pair<PolynomialIdeal, ExactScalar>> p);
};

/// The monomial multiideal of generator supports.
MultiIdeal monomialize(const PolyMultiIdeal& P);

/// mld of the monomialization: an upper bound for the true mld in the given
/// coordinates (result flagged upper_bound_only).
MldResult monomialized_upper_bound(const PolyMultiIdeal& P);

/// Breadth-first search over compositions of at most max_steps elementary
/// automorphisms; returns the smallest monomialized upper bound found and
/// the automorphism achieving it.
std::pair<MldResult, PlaneAutomorphism> coordinate_search(
    const PolyMultiIdeal& P, long long degree_bound,
    const std::vector<Rational>& coefficient_pool, int max_steps);

/// Independent oracle: plain minimum of the log discrepancy over the box
/// {1..B}^2, no fan or Hilbert-basis machinery.
struct BruteForceResult {
  bool negative_found = false;
  ExactScalar value;
  WeightVector argmin;
};
BruteForceResult brute_force_mld(const MultiIdeal& M, long long B);

/// Reusable evaluator for scanning many monomial multiideals that share one
/// exponent vector. Same algorithm as mld / min_k_computing_divisor but
/// skips certificate assembly and caches Hilbert bases across calls.
class MldEvaluator {
 public:
  explicit MldEvaluator(std::vector<ExactScalar> exponents);

  struct Summary {
    bool finite = false;
    ExactScalar value;  // meaningful when finite
    WeightVector min_k_divisor;
  };

  Summary evaluate(const std::vector<const NewtonPolygon*>& polygons) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

nlohmann::json scalar_to_json(const ExactScalar& s);
nlohmann::json mld_result_to_json(const MldResult& r);
nlohmann::json lct_result_to_json(const LctResult& r);

}  // namespace planemld
