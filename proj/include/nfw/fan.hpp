#pragma once

#include "nfw/linalg.hpp"
#include "nfw/newton.hpp"

namespace nfw {

// Ray of a simplicial fan subdividing the nonnegative orthant.  A ray may
// simultaneously be a coordinate axis and carry facet-normal labels when the
// directions coincide.
struct Ray {
  IntVec dir;                   // primitive
  std::vector<int> axes;        // axis indices whose unit vector equals dir
  std::vector<int> facet_ids;   // facet normals equal to dir
};

struct SimplicialFan {
  int n = 0;
  std::vector<Ray> rays;                       // sorted lexicographically by dir
  std::vector<std::vector<int>> maximal_cones; // each sorted, list sorted

  bool operator==(const SimplicialFan& other) const;
  int ray_index(const IntVec& dir) const;  // -1 when absent
};

enum class InsertOrder { FacetOrder, ReverseFacetOrder };

// Starts from the orthant cone on the axis rays and stellarly subdivides at
// each facet normal in turn.  The result is canonicalized (rays sorted by
// direction), so equal fans compare equal regardless of construction order.
SimplicialFan build_fan(const std::vector<IntVec>& facet_normals, int n,
                        InsertOrder order = InsertOrder::FacetOrder);

// Every maximal cone must lie inside one dual cone of the polyhedron: the
// support-minimizing faces of its generators share a point.
bool fan_refines_dual(const SimplicialFan& fan, const NewtonPolyhedron& np);

// Exact solid-angle bookkeeping: sections of the maximal cones by the
// hyperplane sum(x) = 1 must tile the standard simplex.
bool fan_fills_orthant(const SimplicialFan& fan);

std::string fan_to_json(const SimplicialFan& fan);

// Piecewise linear function given by values on the rays, linear on each
// maximal cone.
struct PLFunction {
  std::vector<Rational> ray_values;
  std::vector<QVec> cone_forms;  // aligned with fan.maximal_cones
};

PLFunction make_pl(const SimplicialFan& fan, const std::vector<Rational>& ray_values);

// Index of a maximal cone containing v (-1 when v is outside the support).
int locate_cone(const SimplicialFan& fan, const QVec& v);

// Evaluates h at a point of the support; throws when the point is outside.
Rational pl_eval(const SimplicialFan& fan, const PLFunction& h, const QVec& v);

// Values 0 on pure axis rays and offsets[j] on the ray of facet j; a ray
// carrying several labels takes the maximum of its label values.
PLFunction pl_from_offsets(const SimplicialFan& fan, const std::vector<Rational>& facet_values);

// Support-function sense: the function is the minimum of its cone forms, so
// across every wall the neighbour's extra generator must not drop below the
// local form.
bool is_convex(const SimplicialFan& fan, const PLFunction& h);

// Scaling factor M such that psi(q) = M * min_j <p_j,q> / nu_j is an integer
// for every q in N^n.  Defaults to lcm(nu); with `minimal`, returns the least
// divisor of lcm(nu) that works, certified by enumerating the finite set
// {q : <p_j,q> <= lcm(nu)*max(nu) for the minimizing j}.
Int compute_M(const std::vector<IntVec>& normals, const IntVec& nu, bool minimal = false);

// Same, with nu taken as the facet offsets of the polyhedron.
Int compute_M(const NewtonPolyhedron& np, bool minimal = false);

}  // namespace nfw
