#pragma once

#include <span>
#include <string>
#include <vector>

#include "planemld/monomial.hpp"

namespace planemld {

/// A monomial ideal in k[x,y] given by its minimal generators: a divisibility
/// antichain sorted by ex ascending (hence ey strictly descending). The
/// trivial ideal (the whole ring) is exactly generators = [(0,0)].
struct MonomialIdeal {
  std::vector<Monomial> gens;

  bool is_trivial() const { return gens.size() == 1 && gens[0].is_one(); }
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// Primitive integer direction in the closed first quadrant.
struct Ray {
  long long x = 0;
  long long y = 0;
  friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// Newton polygon conv(generators) + R^2_{>=0}: the vertices in staircase
/// order plus the bounded edges with their primitive inner normals (both
/// normal components >= 1 for a staircase hull).
struct NewtonPolygon {
  struct Edge {
    Monomial from, to;
    Ray normal;
  };
  std::vector<Monomial> vertices;
  std::vector<Edge> edges;
};

/// Complete fan in the first quadrant: rays in strictly increasing slope
/// order, starting at (1,0) and ending at (0,1); the cones are the
/// consecutive ray pairs.
struct Fan {
  std::vector<Ray> rays;
};

/// Deduplicates and drops divisible generators; result sorted by ex.
MonomialIdeal make_ideal(std::vector<Monomial> gens);

NewtonPolygon polygon_of(const MonomialIdeal& ideal);

/// <p, Gamma> = min over the polygon of the dot product, attained at a
/// vertex since p lies in the closed first quadrant. Throws on p outside
/// the quadrant or p = 0.
long long support_value(const NewtonPolygon& polygon, long long p1,
                        long long p2);

/// Common refinement: axes plus every bounded-edge inner normal of every
/// polygon. Every support value is linear on each cone of this fan.
Fan refined_fan(std::span<const NewtonPolygon> polygons);
Fan refined_fan(const std::vector<const NewtonPolygon*>& polygons);

/// Minimal generating set of cone(u,v) ∩ Z^2 for adjacent first-quadrant
/// rays, in slope order from u to v; includes u and v. Computed by repeated
/// unimodular subdivision (Hirzebruch-Jung continued fractions).
std::vector<Ray> hilbert_basis(Ray u, Ray v);

/// True iff J ⊆ I, i.e. every generator of J is divisible by a generator
/// of I.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace planemld
