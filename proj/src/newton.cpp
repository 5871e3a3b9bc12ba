#include "planemld/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace planemld {

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  if (m.ex > 0) {
    out += "x";
    if (m.ex > 1) out += "^" + std::to_string(m.ex);
  }
  if (m.ey > 0) {
    if (!out.empty()) out += "*";
    out += "y";
    if (m.ey > 1) out += "^" + std::to_string(m.ey);
  }
  return out;
}

MonomialIdeal make_ideal(std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("make_ideal: no generators");
  for (const Monomial& g : gens)
    if (g.ex < 0 || g.ey < 0)
      throw std::invalid_argument("make_ideal: negative exponent");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& h : gens)
      if (h != g && h.divides(g)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }
  return MonomialIdeal{std::move(minimal)};
}

NewtonPolygon polygon_of(const MonomialIdeal& ideal) {
  // Generators arrive sorted by ex ascending, ey strictly descending.
  // Lower-left hull: keep a chain where each interior point lies strictly
  // below the segment joining its neighbors.
  NewtonPolygon poly;
  std::vector<Monomial> hull;
  for (const Monomial& p : ideal.gens) {
    while (hull.size() >= 2) {
      const Monomial& s = hull[hull.size() - 2];
      const Monomial& t = hull[hull.size() - 1];
      // cross((t-s), (p-s)) <= 0 means t is on or above segment s--p.
      const long long cross = (t.ex - s.ex) * (p.ey - s.ey) -
                              (t.ey - s.ey) * (p.ex - s.ex);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  poly.vertices = std::move(hull);
  for (size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const Monomial& a = poly.vertices[i];
    const Monomial& b = poly.vertices[i + 1];
    long long nx = a.ey - b.ey;  // > 0
    long long ny = b.ex - a.ex;  // > 0
    const long long g = std::gcd(nx, ny);
    poly.edges.push_back({a, b, Ray{nx / g, ny / g}});
  }
  return poly;
}

long long support_value(const NewtonPolygon& polygon, long long p1,
                        long long p2) {
  if (p1 < 0 || p2 < 0 || (p1 == 0 && p2 == 0))
    throw std::invalid_argument("support_value: p must be nonzero in Q1");
  long long best = p1 * polygon.vertices.front().ex +
                   p2 * polygon.vertices.front().ey;
  for (size_t i = 1; i < polygon.vertices.size(); ++i) {
    const long long v =
        p1 * polygon.vertices[i].ex + p2 * polygon.vertices[i].ey;
    if (v < best) best = v;
  }
  return best;
}

namespace {

// Slope order: r before s iff r.x*s.y - r.y*s.x > 0 (counterclockwise from
// (1,0) toward (0,1)).
bool slope_less(const Ray& r, const Ray& s) {
  return r.x * s.y - r.y * s.x > 0;
}

}  // namespace

Fan refined_fan(std::span<const NewtonPolygon> polygons) {
  std::vector<Ray> rays{{1, 0}, {0, 1}};
  for (const NewtonPolygon& poly : polygons)
    for (const auto& e : poly.edges) rays.push_back(e.normal);
  std::sort(rays.begin(), rays.end(), slope_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return Fan{std::move(rays)};
}

Fan refined_fan(const std::vector<const NewtonPolygon*>& polygons) {
  std::vector<Ray> rays{{1, 0}, {0, 1}};
  for (const NewtonPolygon* poly : polygons)
    for (const auto& e : poly->edges) rays.push_back(e.normal);
  std::sort(rays.begin(), rays.end(), slope_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return Fan{std::move(rays)};
}

namespace {

long long det2(const Ray& u, const Ray& v) { return u.x * v.y - u.y * v.x; }

// Extended gcd: returns (g, s, t) with s*a + t*b = g.
struct Egcd {
  long long g, s, t;
};

Egcd egcd(long long a, long long b) {
  if (b == 0) return {a, 1, 0};
  Egcd r = egcd(b, a % b);
  return {r.g, r.t, r.s - (a / b) * r.t};
}

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<Ray> hilbert_basis(Ray u, Ray v) {
  if (u.x < 0 || u.y < 0 || v.x < 0 || v.y < 0)
    throw std::invalid_argument("hilbert_basis: rays must lie in Q1");
  bool swapped = false;
  if (det2(u, v) < 0) {
    std::swap(u, v);
    swapped = true;
  }
  if (det2(u, v) == 0) throw std::invalid_argument("hilbert_basis: parallel");

  // Walk the bounded boundary of conv(cone ∩ Z^2 \ {0}) from u to v. Each
  // step maps the current cone to normal form cone((1,0),(a,b)) with
  // 0 <= a < b = det by a unimodular transform; the next boundary lattice
  // point is then the preimage of (1,1).
  std::vector<Ray> out{u};
  Ray cur = u;
  while (det2(cur, v) > 1) {
    const Egcd e = egcd(cur.x, cur.y);
    // M = [[s, t], [-y, x]] maps cur to (1,0), det(M) = 1.
    long long m00 = e.s, m01 = e.t, m10 = -cur.y, m11 = cur.x;
    long long a = m00 * v.x + m01 * v.y;
    long long b = m10 * v.x + m11 * v.y;  // = det(cur, v) > 1
    // Shear [[1, -t'], [0, 1]] fixes (1,0) and brings a into [0, b).
    const long long tshift = floordiv(a, b);
    m00 -= tshift * m10;
    m01 -= tshift * m11;
    // w = T^{-1} (1,1) with T = [[m00, m01], [m10, m11]], det(T) = 1.
    Ray w{m11 - m01, m00 - m10};
    out.push_back(w);
    cur = w;
  }
  out.push_back(v);
  if (swapped) std::reverse(out.begin(), out.end());
  return out;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  for (const Monomial& g : J.gens) {
    bool covered = false;
    for (const Monomial& h : I.gens)
      if (h.divides(g)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (size_t i = 0; i < ideal.gens.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens[i]);
  }
  return out;
}

}  // namespace planemld
