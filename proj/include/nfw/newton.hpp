#pragma once

#include "nfw/polynomial.hpp"

namespace nfw {

// Compact facet of conv(S) + R_{>=0}^n: primitive inward normal with strictly
// positive entries, offset = min <normal, q> over S, and the support points
// realizing the minimum.
struct Facet {
  IntVec normal;
  Int offset = 0;
  std::vector<int> points;  // indices into NewtonPolyhedron::support
};

struct NewtonPolyhedron {
  int n = 0;
  std::vector<Exponent> support;  // deduplicated, sorted
  std::vector<Facet> facets;      // sorted lexicographically by (normal, offset)
  std::vector<int> vertices;      // indices into support

  size_t facet_count() const { return facets.size(); }
  std::vector<IntVec> normals() const;
  IntVec offsets() const;
  // Column l collects the l-th entry of every facet normal.
  std::vector<IntVec> normal_columns() const;
};

// Facets found by exhaustive hyperplane candidates through n support points;
// exponential in n, fine at the supported scale (n <= 6, small supports).
NewtonPolyhedron newton_polyhedron(std::vector<Exponent> points);

inline NewtonPolyhedron newton_polyhedron_of(const Polynomial& g) {
  return newton_polyhedron(g.support());
}

// Support of the product g_1 * ... * g_k without expanding coefficients.
std::vector<Exponent> sum_supports(const std::vector<Polynomial>& gs);

// Every coordinate axis carries a support point.
bool is_convenient(const std::vector<Exponent>& points, int n);

// Every two compact facets share a point.
bool is_bistellar(const NewtonPolyhedron& np);

// Row i: min over supp(g_i) of <p_j, q> for each facet normal p_j.
std::vector<IntVec> nu_matrix(const std::vector<Polynomial>& gs, const std::vector<IntVec>& normals);
IntVec nu_row(const Polynomial& g, const std::vector<IntVec>& normals);

// Terms of g sitting on every selected facet, with the thresholds taken from
// g's own row minima.
Polynomial initial_part(const Polynomial& g, const std::vector<IntVec>& normals,
                        const std::vector<int>& facet_subset);

// Cone version: coordinates for the axis generators vanish and the facet
// thresholds are prescribed exactly.
Polynomial initial_part_cone(const Polynomial& g, const std::vector<int>& axis_vars,
                             const std::vector<IntVec>& cone_normals, const std::vector<Int>& thresholds);

// Same with rational thresholds (weighted one-index filtrations scale the
// offsets by rho/M).
Polynomial initial_part_cone(const Polynomial& g, const std::vector<int>& axis_vars,
                             const std::vector<IntVec>& cone_normals, const std::vector<Rational>& thresholds);

// Plain lattice polytope conv(points); used for global (Laurent) supports.
struct Polytope {
  int n = 0;
  std::vector<Exponent> points;  // deduplicated, sorted
};

Polytope make_polytope(std::vector<Exponent> points);
int affine_dim(const std::vector<Exponent>& points);
bool is_full(const Polytope& p);

// Indices of the points minimizing <normal, q>.
std::vector<int> min_face(const Polytope& p, const IntVec& normal);

struct PolytopeFacet {
  IntVec normal;  // primitive inner normal
  Int offset = 0;
  std::vector<int> points;
};

// Facets of a full-dimensional polytope, sorted by normal; throws when the
// polytope is not full-dimensional.
std::vector<PolytopeFacet> polytope_facets(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// Primitive inner facet normals of the Minkowski sum a + b, assembled from
// affine bases split across the two summands.  Stays polynomial in the
// summand point counts instead of enumerating point subsets of the sum.
// Throws when the sum is not full-dimensional.
std::vector<IntVec> minkowski_facet_normals(const Polytope& a, const Polytope& b);

}  // namespace nfw
