#include "planemld/bounds.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

namespace planemld {

namespace {

const MonomialIdeal& trivial_ideal() {
  static const MonomialIdeal t{{Monomial{0, 0}}};
  return t;
}

}  // namespace

void enumerate_staircases(long long M, bool include_trivial,
                          const std::function<void(const MonomialIdeal&)>& fn) {
  if (M < 0) throw std::invalid_argument("box bound must be >= 0");
  if (include_trivial) fn(trivial_ideal());
  // Generators are chosen with ex strictly increasing and ey strictly
  // decreasing, so every emitted list is an antichain and each antichain
  // appears exactly once. (0,0) divides everything, so it occurs only in the
  // trivial singleton handled above.
  std::vector<Monomial> gens;
  auto rec = [&](auto&& self) -> void {
    const long long ex0 = gens.empty() ? 0 : gens.back().ex + 1;
    const long long ey_max = gens.empty() ? M : gens.back().ey - 1;
    for (long long ex = ex0; ex <= M; ++ex)
      for (long long ey = ey_max; ey >= 0; --ey) {
        if (gens.empty() && ex == 0 && ey == 0) continue;
        gens.push_back({ex, ey});
        fn(MonomialIdeal{gens});
        self(self);
        gens.pop_back();
      }
  };
  rec(rec);
}

std::vector<MonomialIdeal> staircases(long long M, bool include_trivial) {
  std::vector<MonomialIdeal> out;
  enumerate_staircases(M, include_trivial,
                       [&](const MonomialIdeal& I) { out.push_back(I); });
  return out;
}

bool value_less(const MldValue& lhs, const MldValue& rhs) {
  if (!lhs.finite) return rhs.finite;
  if (!rhs.finite) return false;
  return less(lhs.v, rhs.v);
}

void insert_value(ValueSet& set, const MldValue& v) {
  auto it = std::lower_bound(set.begin(), set.end(), v, value_less);
  if (it == set.end() || !(*it == v)) set.insert(it, v);
}

bool set_contains(const ValueSet& set, const MldValue& v) {
  auto it = std::lower_bound(set.begin(), set.end(), v, value_less);
  return it != set.end() && *it == v;
}

namespace {

long long tag_of(const MonomialIdeal& I) {
  long long t = 0;
  for (const Monomial& g : I.gens) t = std::max({t, g.ex, g.ey});
  return t;
}

struct SlotEntry {
  MonomialIdeal ideal;
  NewtonPolygon poly;
  long long tag;
};

using TupleFn = std::function<void(
    const std::vector<const MonomialIdeal*>&,
    const std::vector<const NewtonPolygon*>&, long long tag)>;

// Iterates all tuples of staircases, slot i bounded by boxes[i]. The trivial
// ideal is allowed in every slot; the all-trivial tuple is visited only when
// flagged. Single-slot scans stream; multi-slot scans materialize the slot
// lists once and run an odometer. tag is the smallest box containing every
// generator of the tuple.
void scan_tuples(const std::vector<long long>& boxes, bool include_all_trivial,
                 const TupleFn& fn) {
  for (long long b : boxes)
    if (b < 0) throw std::invalid_argument("box bound must be >= 0");
  if (boxes.size() == 1) {
    enumerate_staircases(boxes[0], include_all_trivial,
                         [&](const MonomialIdeal& I) {
                           const NewtonPolygon poly = polygon_of(I);
                           fn({&I}, {&poly}, tag_of(I));
                         });
    return;
  }
  std::vector<std::vector<SlotEntry>> slots(boxes.size());
  for (size_t i = 0; i < boxes.size(); ++i) {
    slots[i].push_back({trivial_ideal(), polygon_of(trivial_ideal()), 0});
    enumerate_staircases(boxes[i], false, [&](const MonomialIdeal& I) {
      slots[i].push_back({I, polygon_of(I), tag_of(I)});
    });
  }
  std::vector<size_t> idx(slots.size(), 0);
  std::vector<const MonomialIdeal*> ideals(slots.size());
  std::vector<const NewtonPolygon*> polys(slots.size());
  for (;;) {
    long long tag = 0;
    bool all_trivial = true;
    for (size_t i = 0; i < slots.size(); ++i) {
      const SlotEntry& e = slots[i][idx[i]];
      ideals[i] = &e.ideal;
      polys[i] = &e.poly;
      tag = std::max(tag, e.tag);
      if (idx[i] != 0) all_trivial = false;
    }
    if (!all_trivial || include_all_trivial) fn(ideals, polys, tag);
    size_t i = idx.size();
    while (i > 0) {
      if (++idx[i - 1] < slots[i - 1].size()) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
}

MldValue summary_value(const MldEvaluator::Summary& s) {
  return s.finite ? MldValue::of(s.value) : MldValue::minus_infinity();
}

}  // namespace

EllReport ell_search(const std::vector<ExactScalar>& exponents,
                     const std::vector<long long>& boxes, bool include_trivial,
                     size_t witness_cap) {
  if (exponents.size() != boxes.size())
    throw std::invalid_argument("one box bound per exponent required");
  const MldEvaluator evaluator(exponents);
  EllReport report;
  report.exponents = exponents;
  report.boxes = boxes;
  report.include_trivial = include_trivial;
  scan_tuples(boxes, include_trivial,
              [&](const std::vector<const MonomialIdeal*>& ideals,
                  const std::vector<const NewtonPolygon*>& polys, long long) {
                const MldEvaluator::Summary s = evaluator.evaluate(polys);
                ++report.tuples_scanned;
                const long long k = s.min_k_divisor.k();
                if (k > report.max_min_k) {
                  report.max_min_k = k;
                  report.witnesses.clear();
                }
                if (k == report.max_min_k &&
                    report.witnesses.size() < witness_cap) {
                  EllReport::Witness w;
                  for (const MonomialIdeal* I : ideals) w.ideals.push_back(*I);
                  w.divisor = s.min_k_divisor;
                  w.value = summary_value(s);
                  report.witnesses.push_back(std::move(w));
                }
                insert_value(report.value_set, summary_value(s));
              });
  return report;
}

EllReport ell_search(const std::vector<ExactScalar>& exponents, long long M,
                     bool include_trivial, size_t witness_cap) {
  return ell_search(exponents, std::vector<long long>(exponents.size(), M),
                    include_trivial, witness_cap);
}

long long closed_form_ell(const ExactScalar& e1) {
  const ExactScalar one = ExactScalar::of_int(1);
  const ExactScalar gap = sub(e1, one);
  if (sign(gap) < 0)
    throw std::domain_error("no closed form is available for e1 < 1");
  if (e1 == one) return 4;
  if (sign(sub(e1, ExactScalar::of_int(2))) > 0) return 1;
  // 1 < e1 <= 2: ceil(1/(e1-1)) + 1.
  if (e1.is_rational()) return to_ll(ceil_of(Rational(1) / gap.a)) + 1;
  // ceil(1/(e1-1)) = min { n : n*(e1-1) >= 1 }, found by scan since the
  // reciprocal leaves the scalar field.
  constexpr long long kCeilCap = 1LL << 20;
  for (long long n = 1; n <= kCeilCap; ++n)
    if (sign(sub(scale(gap, rat(n)), one)) >= 0) return n + 1;
  throw std::runtime_error("ceiling scan cap exceeded");
}

ValueSetReport value_set(const std::vector<ExactScalar>& exponents,
                         long long M) {
  const MldEvaluator evaluator(exponents);
  ValueSetReport report;
  report.box = M;
  // For each distinct value, the smallest box whose scan already attains it;
  // the set stops growing exactly at the largest of those.
  std::vector<std::pair<MldValue, long long>> first_seen;
  scan_tuples(std::vector<long long>(exponents.size(), M), true,
              [&](const std::vector<const MonomialIdeal*>&,
                  const std::vector<const NewtonPolygon*>& polys,
                  long long tag) {
                const MldValue v =
                    summary_value(evaluator.evaluate(polys));
                for (auto& [seen, box] : first_seen)
                  if (seen == v) {
                    box = std::min(box, tag);
                    return;
                  }
                first_seen.emplace_back(v, tag);
              });
  for (const auto& [v, box] : first_seen) {
    insert_value(report.values, v);
    report.stabilized_at = std::max(report.stabilized_at, box);
  }
  return report;
}

AccProbeReport acc_probe(const std::vector<ExactScalar>& dcc_pool, long long M,
                         int samples, unsigned long long seed) {
  if (dcc_pool.empty()) throw std::invalid_argument("pool must be nonempty");
  for (const ExactScalar& e : dcc_pool)
    if (sign(e) <= 0)
      throw std::invalid_argument("pool entries must be strictly positive");
  if (samples < 0) throw std::invalid_argument("samples must be >= 0");
  AccProbeReport report;
  report.pool = dcc_pool;
  report.box = M;
  report.samples = samples;
  report.caveat = "an empirical, desk-scale illustration, not a proof";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick_size(1, 2);
  std::uniform_int_distribution<size_t> pick_exp(0, dcc_pool.size() - 1);
  for (int s = 0; s < samples; ++s) {
    std::vector<ExactScalar> exponents;
    const size_t arity = pick_size(rng);
    for (size_t i = 0; i < arity; ++i)
      exponents.push_back(dcc_pool[pick_exp(rng)]);
    const MldEvaluator evaluator(exponents);
    scan_tuples(std::vector<long long>(exponents.size(), M), true,
                [&](const std::vector<const MonomialIdeal*>&,
                    const std::vector<const NewtonPolygon*>& polys,
                    long long) {
                  insert_value(report.values,
                               summary_value(evaluator.evaluate(polys)));
                });
  }
  // The attained set is finite, so its longest strictly ascending chain is
  // the whole set in increasing order.
  report.longest_ascending_chain = report.values;
  return report;
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string value_text(const MldValue& v) {
  return v.finite ? to_string(v.v) : "-inf";
}

}  // namespace

void write_csv(const EllReport& report, std::ostream& out) {
  out << "generators,exponents,mld,divisor_p1,divisor_p2,k\n";
  std::string exponents_text;
  for (size_t i = 0; i < report.exponents.size(); ++i) {
    if (i) exponents_text += "; ";
    exponents_text += to_string(report.exponents[i]);
  }
  std::vector<std::pair<std::string, std::string>> rows;  // key, full row
  for (const EllReport::Witness& w : report.witnesses) {
    std::string gens;
    for (size_t i = 0; i < w.ideals.size(); ++i) {
      if (i) gens += "; ";
      gens += to_string(w.ideals[i]);
    }
    std::string row = csv_quote(gens) + "," + csv_quote(exponents_text) + "," +
                      csv_quote(value_text(w.value)) + "," +
                      std::to_string(w.divisor.p1) + "," +
                      std::to_string(w.divisor.p2) + "," +
                      std::to_string(w.divisor.k());
    rows.emplace_back(std::move(gens), std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [key, row] : rows) out << row << "\n";
}

nlohmann::json value_to_json(const MldValue& v) {
  if (!v.finite) return {{"kind", "minus_infinity"}};
  return {{"kind", "finite"}, {"scalar", scalar_to_json(v.v)}};
}

namespace {

nlohmann::json values_to_json(const ValueSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const MldValue& v : set) arr.push_back(value_to_json(v));
  return arr;
}

nlohmann::json scalars_to_json(const std::vector<ExactScalar>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ExactScalar& x : xs) arr.push_back(scalar_to_json(x));
  return arr;
}

}  // namespace

nlohmann::json ell_report_to_json(const EllReport& report) {
  nlohmann::json j;
  j["exponents"] = scalars_to_json(report.exponents);
  j["boxes"] = report.boxes;
  j["include_trivial"] = report.include_trivial;
  j["tuples_scanned"] = report.tuples_scanned;
  j["max_min_k"] = report.max_min_k;
  j["witnesses"] = nlohmann::json::array();
  for (const EllReport::Witness& w : report.witnesses) {
    nlohmann::json ideals = nlohmann::json::array();
    for (const MonomialIdeal& I : w.ideals) ideals.push_back(to_string(I));
    j["witnesses"].push_back(
        {{"ideals", ideals},
         {"divisor", {{"p", {w.divisor.p1, w.divisor.p2}}, {"k", w.divisor.k()}}},
         {"value", value_to_json(w.value)}});
  }
  j["value_set"] = values_to_json(report.value_set);
  return j;
}

nlohmann::json value_set_report_to_json(const ValueSetReport& report) {
  return {{"values", values_to_json(report.values)},
          {"box", report.box},
          {"stabilized_at", report.stabilized_at}};
}

nlohmann::json acc_probe_report_to_json(const AccProbeReport& report) {
  nlohmann::json j;
  j["pool"] = scalars_to_json(report.pool);
  j["box"] = report.box;
  j["samples"] = report.samples;
  // The attained value set, largest first.
  nlohmann::json desc = nlohmann::json::array();
  for (auto it = report.values.rbegin(); it != report.values.rend(); ++it)
    desc.push_back(value_to_json(*it));
  j["values_descending"] = desc;
  j["longest_ascending_chain"] =
      values_to_json(report.longest_ascending_chain);
  j["chain_length"] = report.longest_ascending_chain.size();
  j["caveat"] = report.caveat;
  return j;
}

}  // namespace planemld
