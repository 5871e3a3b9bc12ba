#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "planemld/discrepancy.hpp"

namespace planemld {

/// Deterministic, duplicate-free enumeration of all staircase ideals whose
/// minimal generators lie in [0..M]^2 (equivalently, nonempty divisibility
/// antichains of the (M+1)x(M+1) grid). The trivial ideal (1) is emitted
/// first when include_trivial is set; it is the only antichain containing
/// (0,0).
void enumerate_staircases(long long M, bool include_trivial,
                          const std::function<void(const MonomialIdeal&)>& fn);

std::vector<MonomialIdeal> staircases(long long M, bool include_trivial);

/// An mld value: minus infinity or a finite exact scalar.
struct MldValue {
  bool finite = false;
  ExactScalar v;

  static MldValue minus_infinity() { return {}; }
  static MldValue of(ExactScalar s) { return {true, std::move(s)}; }
  bool operator==(const MldValue& o) const {
    return finite == o.finite && (!finite || v == o.v);
  }
};

/// MinusInfinity sorts first.
bool value_less(const MldValue& lhs, const MldValue& rhs);

/// Sorted duplicate-free set of mld values.
using ValueSet = std::vector<MldValue>;
void insert_value(ValueSet& set, const MldValue& v);
bool set_contains(const ValueSet& set, const MldValue& v);

struct EllReport {
  std::vector<ExactScalar> exponents;
  std::vector<long long> boxes;  // per-slot generator box bound
  bool include_trivial = false;  // whether the all-trivial tuple was counted
  long long tuples_scanned = 0;
  long long max_min_k = 0;  // max over tuples of the minimal witness k
  struct Witness {
    std::vector<MonomialIdeal> ideals;
    WeightVector divisor;
    MldValue value;
  };
  std::vector<Witness> witnesses;  // tuples achieving max_min_k (capped)
  ValueSet value_set;
};

/// Iterates all tuples of staircases (slot i bounded by boxes[i], trivial
/// ideal allowed per slot; the all-trivial tuple is skipped unless
/// include_trivial), computing mld and the minimal-k computing divisor for
/// each. Aggregates the max of k, its witnesses (at most witness_cap, in
/// enumeration order) and the set of mld values.
EllReport ell_search(const std::vector<ExactScalar>& exponents,
                     const std::vector<long long>& boxes,
                     bool include_trivial = false, size_t witness_cap = 32);

EllReport ell_search(const std::vector<ExactScalar>& exponents, long long M,
                     bool include_trivial = false, size_t witness_cap = 32);

/// Closed forms for single exponents e1 >= 1:
///   e1 > 2        -> 1
///   1 < e1 <= 2   -> ceil(1/(e1-1)) + 1
///   e1 = 1        -> 4
/// Throws std::domain_error for e1 < 1 (no closed form is available there).
long long closed_form_ell(const ExactScalar& e1);

struct ValueSetReport {
  ValueSet values;
  long long box = 0;
  long long stabilized_at = 0;  // smallest M* <= M with set(M*) == set(M)
};

/// Set of mld values over all tuples at box bound M (trivial tuple
/// included), plus the bound at which the set stopped growing.
ValueSetReport value_set(const std::vector<ExactScalar>& exponents,
                         long long M);

struct AccProbeReport {
  std::vector<ExactScalar> pool;  // the finite DCC description
  long long box = 0;
  int samples = 0;
  ValueSet values;
  std::vector<MldValue> longest_ascending_chain;
  std::string caveat;
};

/// Draws exponent tuples from the finite DCC description (deterministic
/// seed), unions the mld value sets, and reports the longest strictly
/// ascending chain of attained values. Empirical desk-scale evidence only.
AccProbeReport acc_probe(const std::vector<ExactScalar>& dcc_pool, long long M,
                         int samples, unsigned long long seed);

/// CSV: header generators,exponents,mld,divisor_p1,divisor_p2,k then one row
/// per witness, sorted by generators text.
void write_csv(const EllReport& report, std::ostream& out);

nlohmann::json ell_report_to_json(const EllReport& report);
nlohmann::json value_set_report_to_json(const ValueSetReport& report);
nlohmann::json acc_probe_report_to_json(const AccProbeReport& report);
nlohmann::json value_to_json(const MldValue& v);

}  // namespace planemld
