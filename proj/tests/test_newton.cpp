#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "planemld/newton.hpp"

using namespace planemld;

namespace {

// Independent support-value oracle: min over all generators, no hull.
long long oracle_support(const MonomialIdeal& I, long long p1, long long p2) {
  long long best = p1 * I.gens[0].ex + p2 * I.gens[0].ey;
  for (const Monomial& g : I.gens)
    best = std::min(best, p1 * g.ex + p2 * g.ey);
  return best;
}

// Independent Hilbert-basis oracle: lattice points of the cone in a box,
// minus the reducible ones (sums of two other cone points).
std::set<std::pair<long long, long long>> oracle_hilbert(Ray u, Ray v,
                                                         long long box) {
  auto inside = [&](long long x, long long y) {
    // Between u and v in either orientation.
    const long long du = u.x * y - u.y * x;
    const long long dv = v.x * y - v.y * x;
    return (du >= 0 && dv <= 0) || (du <= 0 && dv >= 0);
  };
  std::vector<std::pair<long long, long long>> pts;
  for (long long x = 0; x <= box; ++x)
    for (long long y = 0; y <= box; ++y)
      if ((x || y) && inside(x, y)) pts.emplace_back(x, y);
  std::set<std::pair<long long, long long>> irreducible;
  for (const auto& [x, y] : pts) {
    bool reducible = false;
    for (const auto& [a, b] : pts)
      if ((a || b) && (a != x || b != y) && a <= x && b <= y &&
          inside(x - a, y - b) && (x - a || y - b))
        reducible = true;
    if (!reducible) irreducible.insert({x, y});
  }
  return irreducible;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, long long box) {
  std::uniform_int_distribution<long long> coord(0, box);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Monomial> gens;
  for (int i = 0, n = count(rng); i < n; ++i)
    gens.push_back({coord(rng), coord(rng)});
  return make_ideal(gens);
}

}  // namespace

TEST_CASE("minimal generators form a sorted antichain") {
  const MonomialIdeal I =
      make_ideal({{2, 3}, {2, 3}, {4, 5}, {0, 7}, {5, 0}, {3, 3}});
  // (4,5) and (3,3) are divisible by (2,3).
  CHECK(I.gens == std::vector<Monomial>{{0, 7}, {2, 3}, {5, 0}});
  CHECK(make_ideal({{0, 0}, {1, 2}}).is_trivial());
  CHECK_THROWS_AS(make_ideal({}), std::invalid_argument);
  CHECK_THROWS_AS(make_ideal({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("polygon of the cusp ideal") {
  const NewtonPolygon poly = polygon_of(make_ideal({{2, 0}, {0, 3}}));
  CHECK(poly.vertices == std::vector<Monomial>{{0, 3}, {2, 0}});
  REQUIRE(poly.edges.size() == 1);
  CHECK(poly.edges[0].normal == Ray{3, 2});
}

TEST_CASE("polygon drops non-extremal generators") {
  // (1,1) lies on the segment from (0,2) to (2,0); (2,2) is interior.
  const NewtonPolygon poly = polygon_of(make_ideal({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(poly.vertices == std::vector<Monomial>{{0, 2}, {2, 0}});
  // (1,2) lies on the segment from (0,3) to (3,0): collinear points collapse.
  const NewtonPolygon collinear =
      polygon_of(make_ideal({{0, 3}, {1, 2}, {3, 0}}));
  CHECK(collinear.vertices == std::vector<Monomial>{{0, 3}, {3, 0}});
  // (1,1) is a true vertex: the hull bends at it.
  const NewtonPolygon poly2 = polygon_of(make_ideal({{0, 3}, {1, 1}, {3, 0}}));
  CHECK(poly2.vertices == std::vector<Monomial>{{0, 3}, {1, 1}, {3, 0}});
  REQUIRE(poly2.edges.size() == 2);
  CHECK(poly2.edges[0].normal == Ray{2, 1});
  CHECK(poly2.edges[1].normal == Ray{1, 2});
}

TEST_CASE("support value equals the generator minimum") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> w(0, 9);
  for (int i = 0; i < 200; ++i) {
    const MonomialIdeal I = random_ideal(rng, 8);
    const NewtonPolygon poly = polygon_of(I);
    long long p1 = w(rng), p2 = w(rng);
    if (p1 == 0 && p2 == 0) p1 = 1;
    CHECK(support_value(poly, p1, p2) == oracle_support(I, p1, p2));
  }
  CHECK_THROWS_AS(support_value(polygon_of(make_ideal({{1, 1}})), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("refined fan contains axes and all edge normals, slope-sorted") {
  const std::vector<NewtonPolygon> polys{
      polygon_of(make_ideal({{2, 0}, {0, 3}})),
      polygon_of(make_ideal({{3, 0}, {1, 2}, {0, 5}}))};
  const Fan fan = refined_fan(polys);
  REQUIRE(fan.rays.size() >= 2);
  CHECK(fan.rays.front() == Ray{1, 0});
  CHECK(fan.rays.back() == Ray{0, 1});
  for (size_t i = 0; i + 1 < fan.rays.size(); ++i)
    CHECK(fan.rays[i].x * fan.rays[i + 1].y -
              fan.rays[i].y * fan.rays[i + 1].x >
          0);
  for (const auto& poly : polys)
    for (const auto& e : poly.edges)
      CHECK(std::find(fan.rays.begin(), fan.rays.end(), e.normal) !=
            fan.rays.end());
}

TEST_CASE("Hilbert bases match the lattice-point oracle") {
  const std::vector<std::pair<Ray, Ray>> cones{
      {{1, 0}, {0, 1}}, {{1, 0}, {2, 3}}, {{3, 2}, {0, 1}}, {{1, 0}, {3, 2}},
      {{5, 3}, {1, 2}}, {{1, 1}, {1, 4}}, {{7, 2}, {2, 7}}};
  for (const auto& [u, v] : cones) {
    const std::vector<Ray> basis = hilbert_basis(u, v);
    CHECK(basis.front() == u);
    CHECK(basis.back() == v);
    std::set<std::pair<long long, long long>> got;
    for (const Ray& r : basis) got.insert({r.x, r.y});
    const long long box =
        std::max({u.x, u.y, v.x, v.y}) + std::max({u.x, u.y, v.x, v.y});
    CHECK(got == oracle_hilbert(u, v, box));
  }
  CHECK_THROWS_AS(hilbert_basis({1, 2}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_basis({-1, 2}, {1, 0}), std::invalid_argument);
}

TEST_CASE("hand-checked Hilbert bases") {
  CHECK(hilbert_basis({1, 0}, {2, 3}) ==
        std::vector<Ray>{{1, 0}, {1, 1}, {2, 3}});
  CHECK(hilbert_basis({3, 2}, {0, 1}) ==
        std::vector<Ray>{{3, 2}, {1, 1}, {0, 1}});
  CHECK(hilbert_basis({1, 0}, {1, 3}) ==
        std::vector<Ray>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("ideal containment via generator divisibility") {
  const MonomialIdeal I = make_ideal({{1, 0}, {0, 1}});  // maximal ideal
  const MonomialIdeal J = make_ideal({{2, 0}, {0, 3}});
  CHECK(contains(I, J));
  CHECK_FALSE(contains(J, I));
  CHECK(contains(I, I));
  CHECK(contains(make_ideal({{0, 0}}), I));
}

TEST_CASE("ideal text form") {
  CHECK(to_string(make_ideal({{2, 0}, {0, 3}})) == "y^3, x^2");
  CHECK(to_string(make_ideal({{0, 0}})) == "1");
  CHECK(to_string(make_ideal({{1, 1}})) == "x*y");
}
