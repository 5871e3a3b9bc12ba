#include "planemld/discrepancy.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace planemld {

MultiIdeal MultiIdeal::of(
    std::vector<std::pair<MonomialIdeal, ExactScalar>> p) {
  if (p.empty()) throw std::invalid_argument("multiideal needs >= 1 pair");
  for (const auto& [ideal, e] : p) {
    if (ideal.gens.empty())
      throw std::invalid_argument("ideal without generators");
    if (sign(e) <= 0)
      throw std::invalid_argument("exponent must be strictly positive");
  }
  return MultiIdeal{std::move(p)};
}

PolyMultiIdeal PolyMultiIdeal::of(
    std::vector<std::pair<PolynomialIdeal, ExactScalar>> p) {
  if (p.empty()) throw std::invalid_argument("multiideal needs >= 1 pair");
  for (size_t i = 1; i < p.size(); ++i)
    if (!(p[i].first.field == p[0].first.field))
      throw std::invalid_argument("coefficient field mismatch");
  for (const auto& [ideal, e] : p)
    if (sign(e) <= 0)
      throw std::invalid_argument("exponent must be strictly positive");
  return PolyMultiIdeal{std::move(p)};
}

namespace {

constexpr long long kScanCap = 1LL << 15;

using PolyRefs = std::vector<const NewtonPolygon*>;

// Exponent components scaled to machine words by the common denominator D;
// a-values become integer triples (A, B, C) meaning (A + B*pi + C/pi)/D.
// Usable when every product in the evaluation fits comfortably in 64 bits:
// |scaled component| <= 2^20, vertex coordinates <= 2^12, weights <= 2^15
// (the scan cap) keep |component * support| <= 2^48 per ideal and the
// final triple within sign_combo's certified range.
struct ScaledExponents {
  bool fast = false;
  long long D = 1;
  std::vector<std::array<long long, 3>> comp;

  static ScaledExponents build(const std::vector<ExactScalar>& exps) {
    constexpr long long kCompLimit = 1LL << 20;
    ScaledExponents se;
    if (exps.size() > 64) return se;
    Integer den(1);
    for (const ExactScalar& e : exps) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.a.get_den().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.b.get_den().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.c.get_den().get_mpz_t());
    }
    if (!den.fits_slong_p() || to_ll(den) > kCompLimit) return se;
    for (const ExactScalar& e : exps) {
      std::array<long long, 3> c{};
      const Rational* comps[3] = {&e.a, &e.b, &e.c};
      for (size_t i = 0; i < 3; ++i) {
        Integer scaled = comps[i]->get_num() * (den / comps[i]->get_den());
        if (!scaled.fits_slong_p() || std::abs(scaled.get_si()) > kCompLimit)
          return se;
        c[i] = to_ll(scaled);
      }
      se.comp.push_back(c);
    }
    se.D = to_ll(den);
    se.fast = true;
    return se;
  }

  static bool polygons_fit(const PolyRefs& polys) {
    constexpr long long kExpLimit = 1LL << 12;
    for (const NewtonPolygon* poly : polys)
      for (const Monomial& v : poly->vertices)
        if (v.ex > kExpLimit || v.ey > kExpLimit) return false;
    return true;
  }
};

struct FastEngine {
  using Value = std::array<long long, 3>;

  const PolyRefs& polys;
  const ScaledExponents& se;

  Value eval(long long p1, long long p2) const {
    Value v{se.D * (p1 + p2), 0, 0};
    for (size_t i = 0; i < polys.size(); ++i) {
      const auto& verts = polys[i]->vertices;
      long long sv = p1 * verts[0].ex + p2 * verts[0].ey;
      for (size_t j = 1; j < verts.size(); ++j) {
        const long long s = p1 * verts[j].ex + p2 * verts[j].ey;
        if (s < sv) sv = s;
      }
      v[0] -= se.comp[i][0] * sv;
      v[1] -= se.comp[i][1] * sv;
      v[2] -= se.comp[i][2] * sv;
    }
    return v;
  }

  int sign_of(const Value& v) const { return sign_combo(v[0], v[1], v[2]); }
  bool eq(const Value& u, const Value& v) const { return u == v; }
  bool less(const Value& u, const Value& v) const {
    return sign_combo(u[0] - v[0], u[1] - v[1], u[2] - v[2]) < 0;
  }
  ExactScalar to_exact(const Value& v) const {
    return {rat(v[0], se.D), rat(v[1], se.D), rat(v[2], se.D)};
  }
};

struct ExactEngine {
  using Value = ExactScalar;

  const PolyRefs& polys;
  const std::vector<ExactScalar>& exps;

  Value eval(long long p1, long long p2) const {
    ExactScalar v = ExactScalar::of_int(p1 + p2);
    for (size_t i = 0; i < polys.size(); ++i)
      v = sub(v, scale(exps[i], rat(support_value(*polys[i], p1, p2))));
    return v;
  }
  int sign_of(const Value& v) const { return sign(v); }
  bool eq(const Value& u, const Value& v) const { return u == v; }
  bool less(const Value& u, const Value& v) const {
    return planemld::less(u, v);
  }
  ExactScalar to_exact(const Value& v) const { return v; }
};

template <class Engine>
WeightVector witness_scan(const Engine& eng) {
  for (long long s = 2; s <= kScanCap; ++s)
    for (long long p1 = 1; p1 < s; ++p1)
      if (eng.sign_of(eng.eval(p1, s - p1)) < 0) return {p1, s - p1};
  throw std::runtime_error("witness scan cap exceeded");
}

template <class Engine>
bool any_negative_ray(const Engine& eng, const Fan& fan) {
  for (const Ray& r : fan.rays)
    if (eng.sign_of(eng.eval(r.x, r.y)) < 0) return true;
  return false;
}

template <class Engine>
WeightVector min_k_scan(const Engine& eng,
                        const typename Engine::Value& target,
                        const WeightVector& known) {
  for (long long s = 2; s <= known.p1 + known.p2; ++s)
    for (long long p1 = 1; p1 < s; ++p1)
      if (eng.eq(eng.eval(p1, s - p1), target)) return {p1, s - p1};
  return known;
}

using HilbertCache = std::map<std::pair<Ray, Ray>, std::vector<Ray>>;

const std::vector<Ray>& cached_hilbert_basis(HilbertCache& cache,
                                             std::mutex& mu, const Ray& u,
                                             const Ray& v) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({u, v});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(u, v), hilbert_basis(u, v)).first;
  return it->second;
}

// Core of the solver. Fills the certificate when given one; returns the
// candidate-set minimizer (tie-break: smaller k, then smaller p1) or the
// minus-infinity witness.
template <class Engine>
MldResult mld_with(const Engine& eng, const Fan& fan, HilbertCache* cache,
                   std::mutex* cache_mu, MldCertificate* cert) {
  MldResult res;
  std::optional<Ray> negative;
  for (const Ray& r : fan.rays) {
    const auto v = eng.eval(r.x, r.y);
    if (cert) cert->ray_values.push_back({r, eng.to_exact(v)});
    if (!negative && eng.sign_of(v) < 0) {
      negative = r;
      if (!cert) break;
    }
  }
  if (negative) {
    if (cert) cert->negative_ray = negative;
    res.finite = false;
    res.divisor = witness_scan(eng);
    return res;
  }
  // a >= 0 on all rays, hence (linear on each cone) on the whole quadrant;
  // the minimum over p >= (1,1) is attained on (1,1) or a Hilbert-basis
  // point of some cone: any p decomposes as an N-combination of its cone's
  // basis, and every term of the decomposition has a >= 0.
  std::set<WeightVector> candidates{WeightVector{1, 1}};
  for (size_t i = 0; i + 1 < fan.rays.size(); ++i) {
    const auto add_points = [&](const std::vector<Ray>& basis) {
      for (const Ray& h : basis)
        if (h.x >= 1 && h.y >= 1) candidates.insert(WeightVector{h.x, h.y});
    };
    if (cache)
      add_points(
          cached_hilbert_basis(*cache, *cache_mu, fan.rays[i], fan.rays[i + 1]));
    else
      add_points(hilbert_basis(fan.rays[i], fan.rays[i + 1]));
  }

  bool have = false;
  typename Engine::Value best{};
  WeightVector best_p;
  for (const WeightVector& p : candidates) {
    const auto v = eng.eval(p.p1, p.p2);
    if (cert) cert->candidates.push_back({p, eng.to_exact(v)});
    bool take = !have;
    if (have) {
      if (eng.less(v, best))
        take = true;
      else if (eng.eq(v, best) && (p.k() < best_p.k() ||
                                   (p.k() == best_p.k() && p.p1 < best_p.p1)))
        take = true;
    }
    if (take) {
      have = true;
      best = v;
      best_p = p;
    }
  }
  res.finite = true;
  res.value = eng.to_exact(best);
  res.divisor = best_p;
  return res;
}

struct Problem {
  std::vector<NewtonPolygon> storage;
  PolyRefs polys;
  std::vector<ExactScalar> exps;
  Fan fan;
};

Problem build_problem(const MultiIdeal& M) {
  Problem pr;
  for (const auto& [ideal, e] : M.pairs) {
    pr.storage.push_back(polygon_of(ideal));
    pr.exps.push_back(e);
  }
  for (const NewtonPolygon& poly : pr.storage) pr.polys.push_back(&poly);
  pr.fan = refined_fan(pr.storage);
  return pr;
}

template <class Fn>
auto with_engine(const Problem& pr, Fn&& fn) {
  const ScaledExponents se = ScaledExponents::build(pr.exps);
  if (se.fast && ScaledExponents::polygons_fit(pr.polys))
    return fn(FastEngine{pr.polys, se});
  return fn(ExactEngine{pr.polys, pr.exps});
}

}  // namespace

ExactScalar log_discrepancy(long long p1, long long p2, const MultiIdeal& M) {
  if (p1 < 0 || p2 < 0 || (p1 == 0 && p2 == 0))
    throw std::invalid_argument("weight must be nonzero in Q1");
  ExactScalar v = ExactScalar::of_int(p1 + p2);
  for (const auto& [ideal, e] : M.pairs)
    v = sub(v, scale(e, rat(support_value(polygon_of(ideal), p1, p2))));
  return v;
}

long long valuation(const WeightVector& p, const MonomialIdeal& I) {
  return support_value(polygon_of(I), p.p1, p.p2);
}

MldResult mld(const MultiIdeal& M) {
  const Problem pr = build_problem(M);
  return with_engine(pr, [&](const auto& eng) {
    MldCertificate cert;
    MldResult res = mld_with(eng, pr.fan, nullptr, nullptr, &cert);
    res.certificate = std::move(cert);
    return res;
  });
}

WeightVector minus_infinity_witness(const MultiIdeal& M) {
  const Problem pr = build_problem(M);
  return with_engine(pr, [&](const auto& eng) {
    if (!any_negative_ray(eng, pr.fan))
      throw std::logic_error(
          "minus_infinity_witness: multiideal is log canonical");
    return witness_scan(eng);
  });
}

WeightVector min_k_computing_divisor(const MultiIdeal& M) {
  const Problem pr = build_problem(M);
  return with_engine(pr, [&](const auto& eng) {
    const MldResult res = mld_with(eng, pr.fan, nullptr, nullptr, nullptr);
    if (res.is_minus_infinity()) return res.divisor;
    return min_k_scan(eng, eng.eval(res.divisor.p1, res.divisor.p2),
                      res.divisor);
  });
}

bool result_value_less(const MldResult& lhs, const MldResult& rhs) {
  if (lhs.is_minus_infinity()) return !rhs.is_minus_infinity();
  if (rhs.is_minus_infinity()) return false;
  return less(lhs.value, rhs.value);
}

namespace {

ExactScalar ratio_as_scalar(long long num, const ExactScalar& den) {
  const bool ha = den.a != 0, hb = den.b != 0, hc = den.c != 0;
  if (ha && !hb && !hc) return ExactScalar::of(rat(num) / den.a);
  if (!ha && hb && !hc) return ExactScalar::inv_pi_times(rat(num) / den.b);
  if (!ha && !hb && hc) return ExactScalar::pi_times(rat(num) / den.c);
  throw std::domain_error("lct value is not representable in Q + Q*pi + Q/pi");
}

}  // namespace

LctResult lct(const MultiIdeal& M) {
  const Problem pr = build_problem(M);
  LctResult res;
  long long best_num = 0;
  ExactScalar best_den;
  for (const Ray& r : pr.fan.rays) {
    ExactScalar den = ExactScalar::zero();
    bool all_zero = true;
    for (size_t i = 0; i < pr.polys.size(); ++i) {
      const long long sv = support_value(*pr.polys[i], r.x, r.y);
      if (sv != 0) {
        all_zero = false;
        den = add(den, scale(pr.exps[i], rat(sv)));
      }
    }
    if (all_zero) continue;  // ratio is +infinity along this ray
    const long long num = r.x + r.y;
    // num/den < best_num/best_den iff num*best_den < best_num*den.
    if (!res.bounded || less(scale(best_den, rat(num)),
                             scale(den, rat(best_num)))) {
      res.bounded = true;
      best_num = num;
      best_den = den;
      res.computing_ray = r;
    }
  }
  if (!res.bounded) return res;  // trivial multiideal
  res.value = ratio_as_scalar(best_num, best_den);
  res.exceptional = res.computing_ray.x >= 1 && res.computing_ray.y >= 1;
  return res;
}

bool lct_mld_consistency(const MultiIdeal& M) {
  const LctResult t = lct(M);
  if (!t.bounded || sign(t.value) == 0)
    throw std::invalid_argument(
        "lct_mld_consistency needs finite nonzero lct");
  auto scaled_by = [&](const ExactScalar& factor) {
    std::vector<std::pair<MonomialIdeal, ExactScalar>> pairs;
    for (const auto& [ideal, e] : M.pairs) {
      auto prod = try_mul(e, factor);
      if (!prod)
        throw std::domain_error("scaled exponent leaves the scalar field");
      pairs.emplace_back(ideal, *prod);
    }
    return MultiIdeal::of(std::move(pairs));
  };
  // At t the pair is strictly log canonical up to the axis caveat: mld >= 0
  // and every t' > t is not log canonical.
  const MldResult at_t = mld(scaled_by(t.value));
  if (at_t.is_minus_infinity() || sign(at_t.value) < 0) return false;
  for (int k = 1; k <= 5; ++k) {
    const ExactScalar tp = scale(t.value, rat(k + 1, k));
    if (!mld(scaled_by(tp)).is_minus_infinity()) return false;
  }
  return true;
}

MultiIdeal monomialize(const PolyMultiIdeal& P) {
  std::vector<std::pair<MonomialIdeal, ExactScalar>> pairs;
  for (const auto& [ideal, e] : P.pairs)
    pairs.emplace_back(monomialize(ideal), e);
  return MultiIdeal::of(std::move(pairs));
}

MldResult monomialized_upper_bound(const PolyMultiIdeal& P) {
  MldResult res = mld(monomialize(P));
  res.upper_bound_only = true;
  return res;
}

std::pair<MldResult, PlaneAutomorphism> coordinate_search(
    const PolyMultiIdeal& P, long long degree_bound,
    const std::vector<Rational>& coefficient_pool, int max_steps) {
  if (max_steps < 0) throw std::invalid_argument("max_steps >= 0");
  const CoefficientField field = P.pairs[0].first.field;
  std::vector<PlaneAutomorphism> elems;
  if (max_steps > 0)
    elems = elementary_automorphisms(field, degree_bound, coefficient_pool);

  struct Node {
    PlaneAutomorphism phi;
    PolyMultiIdeal image;
  };
  auto apply_all = [](const PlaneAutomorphism& phi, const PolyMultiIdeal& Q) {
    std::vector<std::pair<PolynomialIdeal, ExactScalar>> pairs;
    for (const auto& [ideal, e] : Q.pairs)
      pairs.emplace_back(apply(phi, ideal), e);
    return PolyMultiIdeal::of(std::move(pairs));
  };

  MldResult best = monomialized_upper_bound(P);
  PlaneAutomorphism best_phi{field, {}};

  std::deque<Node> frontier{{PlaneAutomorphism{field, {}}, P}};
  for (int depth = 1; depth <= max_steps; ++depth) {
    std::deque<Node> next;
    for (const Node& node : frontier) {
      for (const PlaneAutomorphism& elem : elems) {
        if (elem.steps.empty()) continue;  // identity adds nothing
        PlaneAutomorphism phi = node.phi;
        phi.steps.push_back(elem.steps.front());
        Node child{std::move(phi), apply_all(elem, node.image)};
        const MldResult bound = monomialized_upper_bound(child.image);
        if (result_value_less(bound, best)) {
          best = bound;
          best_phi = child.phi;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  best.upper_bound_only = true;
  return {best, best_phi};
}

BruteForceResult brute_force_mld(const MultiIdeal& M, long long B) {
  if (B < 1) throw std::invalid_argument("B >= 1");
  std::vector<NewtonPolygon> polys;
  for (const auto& [ideal, e] : M.pairs) polys.push_back(polygon_of(ideal));
  BruteForceResult res;
  bool have = false;
  for (long long p1 = 1; p1 <= B; ++p1)
    for (long long p2 = 1; p2 <= B; ++p2) {
      ExactScalar v = ExactScalar::of_int(p1 + p2);
      for (size_t i = 0; i < polys.size(); ++i)
        v = sub(v, scale(M.pairs[i].second,
                         rat(support_value(polys[i], p1, p2))));
      const WeightVector p{p1, p2};
      bool take = !have;
      if (have) {
        const Ordering ord = compare(v, res.value);
        if (ord == Ordering::Less)
          take = true;
        else if (ord == Ordering::Equal &&
                 (p.k() < res.argmin.k() ||
                  (p.k() == res.argmin.k() && p.p1 < res.argmin.p1)))
          take = true;
      }
      if (take) {
        have = true;
        res.value = v;
        res.argmin = p;
      }
    }
  res.negative_found = sign(res.value) < 0;
  return res;
}

struct MldEvaluator::Impl {
  std::vector<ExactScalar> exps;
  ScaledExponents se;
  mutable HilbertCache hb_cache;
  mutable std::mutex hb_mu;
};

MldEvaluator::MldEvaluator(std::vector<ExactScalar> exponents)
    : impl_(std::make_shared<Impl>()) {
  for (const ExactScalar& e : exponents)
    if (sign(e) <= 0)
      throw std::invalid_argument("exponent must be strictly positive");
  impl_->exps = std::move(exponents);
  impl_->se = ScaledExponents::build(impl_->exps);
}

MldEvaluator::Summary MldEvaluator::evaluate(
    const std::vector<const NewtonPolygon*>& polygons) const {
  if (polygons.size() != impl_->exps.size())
    throw std::invalid_argument("polygon/exponent arity mismatch");
  const Fan fan = refined_fan(polygons);
  auto run = [&](const auto& eng) {
    Summary out;
    const MldResult res =
        mld_with(eng, fan, &impl_->hb_cache, &impl_->hb_mu, nullptr);
    if (res.is_minus_infinity()) {
      out.finite = false;
      out.min_k_divisor = res.divisor;
      return out;
    }
    out.finite = true;
    out.value = res.value;
    out.min_k_divisor = min_k_scan(
        eng, eng.eval(res.divisor.p1, res.divisor.p2), res.divisor);
    return out;
  };
  if (impl_->se.fast && ScaledExponents::polygons_fit(polygons))
    return run(FastEngine{polygons, impl_->se});
  return run(ExactEngine{polygons, impl_->exps});
}

nlohmann::json scalar_to_json(const ExactScalar& s) {
  return {{"a", to_string(s.a)}, {"b", to_string(s.b)}, {"c", to_string(s.c)}};
}

nlohmann::json mld_result_to_json(const MldResult& r) {
  nlohmann::json j;
  if (r.finite)
    j["value"] = {{"kind", "finite"}, {"scalar", scalar_to_json(r.value)}};
  else
    j["value"] = {{"kind", "minus_infinity"}};
  j["divisor"] = {{"p", {r.divisor.p1, r.divisor.p2}}, {"k", r.divisor.k()}};
  nlohmann::json cert;
  cert["ray_values"] = nlohmann::json::array();
  for (const auto& rv : r.certificate.ray_values)
    cert["ray_values"].push_back(
        {{"ray", {rv.ray.x, rv.ray.y}}, {"a", scalar_to_json(rv.a)}});
  if (!r.certificate.candidates.empty()) {
    cert["candidates"] = nlohmann::json::array();
    for (const auto& cv : r.certificate.candidates)
      cert["candidates"].push_back(
          {{"p", {cv.p.p1, cv.p.p2}}, {"a", scalar_to_json(cv.a)}});
  }
  if (r.certificate.negative_ray)
    cert["negative_ray"] = {r.certificate.negative_ray->x,
                            r.certificate.negative_ray->y};
  j["certificate"] = cert;
  if (r.upper_bound_only) j["upper_bound"] = true;
  return j;
}

nlohmann::json lct_result_to_json(const LctResult& r) {
  nlohmann::json j;
  if (r.bounded) {
    j["value"] = {{"kind", "finite"}, {"scalar", scalar_to_json(r.value)}};
    j["ray"] = {r.computing_ray.x, r.computing_ray.y};
    j["exceptional"] = r.exceptional;
  } else {
    j["value"] = {{"kind", "unbounded"}};
  }
  return j;
}

}  // namespace planemld
