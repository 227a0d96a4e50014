#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfw/fan.hpp"
#include "nfw/groebner.hpp"
#include "nfw/newton.hpp"

namespace nfw {

// Verdict semantics: PASS and FAIL are proved facts about the stated
// condition; INCONCLUSIVE means the certificate available here cannot decide
// it (germ-local bound not settled by a global computation, or a resource cap
// was hit).  A checker never guesses.
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view verdict_name(Verdict v);

// Combine per-item verdicts: any FAIL dominates, then any INCONCLUSIVE.
Verdict combine_verdicts(const std::vector<Verdict>& vs);

struct CheckItem {
  std::string label;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Int> dim;       // computed zero-set dimension, when available
  std::optional<Int> required;  // codimension bound the condition demands
  std::string note;             // witness / explanation
};

struct HypothesisReport {
  std::string check;
  std::string note;  // check-level convention or caveat, empty when none
  std::vector<CheckItem> items;

  Verdict verdict() const;
};

std::string report_to_json(const HypothesisReport& r);

// ---- Germ-side checks ------------------------------------------------------
// Quantified over the nonempty facet subsets {j_1 < ... < j_s} of the
// polyhedron.  The selected initial parts of the k generators must cut out a
// zero set of codimension >= bound; conditions are local at the origin, so a
// sufficient global codimension proves PASS while a deficient one is only
// INCONCLUSIVE.  An identically zero initial system has exact codimension 0
// and fails any positive bound outright.

// bound k - s + 1: the factorization of the multi-index series requires it.
HypothesisReport check_series_factorization(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                            const GroebnerOptions& opts = {});

// bound k - s: the graded pieces of the quotient factor through the regular
// sequence under this weaker condition.
HypothesisReport check_graded_factorization(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                            const GroebnerOptions& opts = {});

// bound k - s + 2 for s >= 2: makes the multi-index filtration the
// intersection of its one-index slices.
HypothesisReport check_filtration_intersection(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                               const GroebnerOptions& opts = {});

// ---- Cone-side checks ------------------------------------------------------
// Quantified over the fan faces containing at least one facet-normal ray; for
// a face with l axis rays and s facet rays the cone initial parts are measured
// in the torus, where the verdict is definitive (no germ gap).

// bound k - l - s.
HypothesisReport check_cone_exactness(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                      const SimplicialFan& fan, const GroebnerOptions& opts = {});

// bound k - l - s + 1.
HypothesisReport check_cone_sections(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                     const SimplicialFan& fan, const GroebnerOptions& opts = {});

// Same per-face bound k - l - s + 1, but for the collapsed (one-index)
// filtration: generator i enters at level rho_i, so its initial part on a
// face is cut at the weighted threshold rho_i * offset_j / M on each facet
// ray j (facet equalities, as in the multi-index checks).  This is the
// hypothesis consumed by the collapsed series factorization; it coincides
// with check_cone_sections exactly when every row of the nu matrix is
// proportional to the offset vector (always true for k = 1).
HypothesisReport check_cone_sections_collapsed(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                               const std::vector<Int>& rho, Int big_m, const SimplicialFan& fan,
                                               const GroebnerOptions& opts = {});

// Per face: the cone initial system cuts a smooth complete intersection of
// torus codimension k (empty is admitted as the vacuous case), certified by
// the k x k Jacobian minors having no common torus zero with the system.
HypothesisReport check_nondegeneracy(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                     const SimplicialFan& fan, const GroebnerOptions& opts = {});

// ---- Support-geometry checks (global / Laurent inputs) ---------------------
// Conditions on the convex hulls of the supports.

// Every support polytope is full-dimensional.
HypothesisReport check_fullness(const std::vector<Polynomial>& gs);

// dim(P_1 + ... + P_j) == dim P_j for 2 <= j <= k, and dim P_j > j for all j.
HypothesisReport check_partial_sum_dims(const std::vector<Polynomial>& gs);

// The facet-normal sets of the (full) support polytopes coincide.
HypothesisReport check_edge_sets(const std::vector<Polynomial>& gs);

// k == 2 and n >= 4; for every facet normal p of P_1 + P_2: whenever the face
// of one summand under p has codimension one in that summand, the face of the
// other summand under p has dimension >= 2.
HypothesisReport check_pair_facet_dims(const std::vector<Polynomial>& gs);

}  // namespace nfw
