#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <vector>

#include "planemld/bounds.hpp"

using namespace planemld;

namespace {

// Independent staircase count: brute force over all subsets of the
// (M+1)x(M+1) grid, keeping the nonempty divisibility antichains.
long long oracle_staircase_count(long long M) {
  std::vector<std::pair<long long, long long>> cells;
  for (long long x = 0; x <= M; ++x)
    for (long long y = 0; y <= M; ++y) cells.emplace_back(x, y);
  const size_t n = cells.size();
  long long count = 0;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (size_t j = 0; j < n && ok; ++j) {
        if (i == j || !(mask >> j & 1)) continue;
        if (cells[i].first <= cells[j].first &&
            cells[i].second <= cells[j].second)
          ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

long long binomial(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("staircase enumeration matches the subset oracle") {
  for (long long M = 0; M <= 3; ++M) {
    const auto all = staircases(M, true);
    CHECK((long long)all.size() == oracle_staircase_count(M));
    CHECK(all.front().is_trivial());
    std::set<std::vector<Monomial>> seen;
    for (const auto& I : all) {
      CHECK(seen.insert(I.gens).second);  // no duplicates
      for (const auto& g : I.gens) {
        CHECK(g.ex <= M);
        CHECK(g.ey <= M);
      }
    }
    CHECK(staircases(M, false).size() == all.size() - 1);
  }
  // Counting identity for a bound the subset oracle cannot reach.
  CHECK((long long)staircases(4, true).size() == binomial(10, 5) - 1);
  CHECK(oracle_staircase_count(3) == binomial(8, 4) - 1);
}

TEST_CASE("value set ordering puts minus infinity first") {
  ValueSet s;
  insert_value(s, MldValue::of(ExactScalar::of_int(1)));
  insert_value(s, MldValue::minus_infinity());
  insert_value(s, MldValue::of(ExactScalar::of(rat(1, 2))));
  insert_value(s, MldValue::of(ExactScalar::of_int(1)));  // duplicate
  REQUIRE(s.size() == 3);
  CHECK_FALSE(s[0].finite);
  CHECK(s[1].v == ExactScalar::of(rat(1, 2)));
  CHECK(s[2].v == ExactScalar::of_int(1));
  CHECK(set_contains(s, MldValue::minus_infinity()));
  CHECK_FALSE(set_contains(s, MldValue::of(ExactScalar::of_int(2))));
  CHECK(value_less(MldValue::minus_infinity(),
                   MldValue::of(ExactScalar::of(rat(-100)))));
}

TEST_CASE("search over a big exponent collapses to the diagonal witness") {
  // e = 3 > 2: every nontrivial ideal fails log canonicity already at (1,1).
  const EllReport r = ell_search({ExactScalar::of_int(3)}, 2);
  CHECK(r.max_min_k == 1);
  CHECK(r.tuples_scanned == binomial(6, 3) - 2);
  REQUIRE(r.value_set.size() == 1);
  CHECK_FALSE(r.value_set[0].finite);
  for (const auto& w : r.witnesses) {
    CHECK(w.divisor == WeightVector{1, 1});
    CHECK_FALSE(w.value.finite);
  }
}

TEST_CASE("search bound agrees with the closed form once the box suffices") {
  const EllReport r = ell_search({ExactScalar::of(rat(3, 2))}, 4);
  CHECK(r.max_min_k == closed_form_ell(ExactScalar::of(rat(3, 2))));
}

TEST_CASE("multi-slot tuples and the trivial tuple flag") {
  const std::vector<ExactScalar> e{ExactScalar::of_int(1),
                                   ExactScalar::of_int(1)};
  const EllReport without = ell_search(e, {1, 1}, false);
  const EllReport with = ell_search(e, {1, 1}, true);
  CHECK(without.tuples_scanned == 24);  // 5*5 tuples minus the all-trivial one
  CHECK(with.tuples_scanned == 25);
  // The trivial tuple contributes the smooth value 2.
  CHECK(set_contains(with.value_set, MldValue::of(ExactScalar::of_int(2))));
  CHECK_FALSE(
      set_contains(without.value_set, MldValue::of(ExactScalar::of_int(2))));
  CHECK_THROWS_AS(ell_search(e, std::vector<long long>{1}),
                  std::invalid_argument);
}

TEST_CASE("closed forms for a single exponent") {
  CHECK(closed_form_ell(ExactScalar::of_int(3)) == 1);
  CHECK(closed_form_ell(ExactScalar::of(rat(5, 2))) == 1);
  CHECK(closed_form_ell(ExactScalar::of_int(2)) == 2);
  CHECK(closed_form_ell(ExactScalar::of(rat(3, 2))) == 3);
  CHECK(closed_form_ell(ExactScalar::of(rat(5, 4))) == 5);
  CHECK(closed_form_ell(ExactScalar::of_int(1)) == 4);
  // pi/2 is about 1.5708, so ceil(1/(pi/2 - 1)) + 1 = 2 + 1.
  CHECK(closed_form_ell(ExactScalar::pi_times(rat(1, 2))) == 3);
  CHECK_THROWS_AS(closed_form_ell(ExactScalar::of(rat(1, 2))),
                  std::domain_error);
  CHECK_THROWS_AS(closed_form_ell(ExactScalar::inv_pi_times(rat(2))),
                  std::domain_error);
}

TEST_CASE("value sets and their stabilization bound") {
  const ValueSetReport r = value_set({ExactScalar::of_int(1)}, 4);
  ValueSet expect;
  insert_value(expect, MldValue::minus_infinity());
  insert_value(expect, MldValue::of(ExactScalar::of_int(0)));
  insert_value(expect, MldValue::of(ExactScalar::of_int(1)));
  insert_value(expect, MldValue::of(ExactScalar::of_int(2)));
  CHECK(r.values == expect);
  CHECK(r.stabilized_at == 2);
  CHECK(r.box == 4);
}

TEST_CASE("acc probe is deterministic and labeled as evidence only") {
  const std::vector<ExactScalar> pool{ExactScalar::of_int(1),
                                      ExactScalar::of(rat(1, 2))};
  const AccProbeReport a = acc_probe(pool, 3, 40, 17);
  const AccProbeReport b = acc_probe(pool, 3, 40, 17);
  CHECK(a.values == b.values);
  CHECK(a.longest_ascending_chain == b.longest_ascending_chain);
  CHECK(a.samples == 40);
  CHECK_FALSE(a.values.empty());
  // The chain is the sorted value set itself.
  CHECK(a.longest_ascending_chain.size() == a.values.size());
  for (size_t i = 0; i + 1 < a.longest_ascending_chain.size(); ++i)
    CHECK(value_less(a.longest_ascending_chain[i],
                     a.longest_ascending_chain[i + 1]));
  CHECK(a.caveat == "an empirical, desk-scale illustration, not a proof");

  const AccProbeReport other = acc_probe(pool, 3, 40, 18);
  CHECK(other.samples == 40);  // different seed still runs to completion

  const AccProbeReport empty = acc_probe(pool, 3, 0, 17);
  CHECK(empty.values.empty());
  CHECK(empty.longest_ascending_chain.empty());
}

TEST_CASE("csv export quotes, sorts, and renders minus infinity") {
  const EllReport r = ell_search({ExactScalar::of_int(1)}, 1, false, 64);
  std::ostringstream out;
  write_csv(r, out);
  std::vector<std::string> lines;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 1 + r.witnesses.size());
  CHECK(lines[0] == "generators,exponents,mld,divisor_p1,divisor_p2,k");
  // Rows are sorted by the generators field (unquoted).
  std::vector<std::string> fields;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line[0] == '"')
      fields.push_back(line.substr(1, line.find('"', 1) - 1));
    else
      fields.push_back(line.substr(0, line.find(',')));
  }
  CHECK(std::is_sorted(fields.begin(), fields.end()));
  // The two-generator ideal's text contains a comma and must be quoted.
  bool quoted = false;
  for (const auto& line : lines)
    if (line.find('"') != std::string::npos) {
      quoted = true;
      CHECK(line.substr(0, 1) == "\"");
    }
  CHECK(quoted);

  EllReport inf;
  inf.witnesses.push_back({{make_ideal({{2, 0}, {0, 3}})},
                           {3, 2},
                           MldValue::minus_infinity()});
  std::ostringstream out2;
  write_csv(inf, out2);
  CHECK(out2.str().find("-inf") != std::string::npos);

  std::ostringstream empty;
  write_csv(EllReport{}, empty);
  CHECK(empty.str() == "generators,exponents,mld,divisor_p1,divisor_p2,k\n");
}

TEST_CASE("report serialization shape") {
  const EllReport r = ell_search({ExactScalar::of_int(3)}, 1);
  const nlohmann::json j = ell_report_to_json(r);
  CHECK(j["max_min_k"] == 1);
  CHECK(j["tuples_scanned"] == r.tuples_scanned);
  CHECK(j["witnesses"].is_array());
  CHECK(j["value_set"].is_array());

  CHECK(value_to_json(MldValue::minus_infinity())["kind"] ==
        "minus_infinity");
  const nlohmann::json v =
      value_to_json(MldValue::of(ExactScalar::of(rat(1, 2))));
  CHECK(v["kind"] == "finite");

  const nlohmann::json a =
      acc_probe_report_to_json(acc_probe({ExactScalar::of_int(1)}, 2, 5, 1));
  CHECK(a.contains("values_descending"));
  CHECK(a.contains("longest_ascending_chain"));
  CHECK(a["chain_length"] == a["longest_ascending_chain"].size());
  CHECK(a["caveat"].is_string());

  const nlohmann::json s =
      value_set_report_to_json(value_set({ExactScalar::of_int(1)}, 2));
  CHECK(s["stabilized_at"] == 2);
  CHECK(s["box"] == 2);
}
