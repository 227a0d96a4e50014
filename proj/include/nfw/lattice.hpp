#pragma once

#include "nfw/newton.hpp"
#include "nfw/series.hpp"

namespace nfw {

// Weight data of a monomial filtration: row j assigns the value <p_j, q> to
// the monomial z^q.  The thresholds nu_j and the scaling constant M define
// the collapsed one-index weight psi(q) = M * min_j <p_j,q> / nu_j.
struct FiltrationSpec {
  int n = 0;
  std::vector<IntVec> normals;  // r rows, strictly positive entries
  IntVec offsets;               // nu_j, one per row
  Int M = 1;

  int r() const { return static_cast<int>(normals.size()); }
};

// Spec with the polyhedron's facet normals, thresholds taken from the facet
// offsets, and M from compute_M.
FiltrationSpec filtration_of(const NewtonPolyhedron& np, bool minimal_m = false);

// Validates positivity/shape; throws std::invalid_argument.
void validate(const FiltrationSpec& spec);

// (<p_1,q>, ..., <p_r,q>).
IntVec value_of(const FiltrationSpec& spec, const IntVec& q);

// Componentwise upper bound for {q in N^n : <p_j,q> <= reach_j for some j};
// an all-(-1) result marks the empty set.
IntVec existential_box(const FiltrationSpec& spec, const IntVec& reach);

// dim F_mu / F_{mu+1} for the ambient power series ring:
// #{q in N^n : <p_j,q> >= mu_j for all j, and <p_j,q> <= mu_j for some j}.
Int dim_graded_ambient(const FiltrationSpec& spec, const IntVec& mu);

// Series of the graded dimensions above, exact on the window; carries the
// fact that coefficients vanish when every mu_j is negative.
TruncatedSeries l_series_direct(const FiltrationSpec& spec, const Window& w);

// Ambient Poincare series prod_i 1/(1 - t^{c_i}) with c_i the value vector of
// the i-th variable.
TruncatedSeries ambient_poincare(const FiltrationSpec& spec, const Window& w);

// One-index weight; throws std::logic_error when M fails to clear the
// denominator (spec.M inconsistent with the normals/thresholds).
Int psi(const FiltrationSpec& spec, const IntVec& q);

// #{q in N^n : psi(q) = l}.
Int dim_one_index(const FiltrationSpec& spec, Int l);

// One-variable series of the one-index graded dimensions on the window.
TruncatedSeries p_hat_direct(const FiltrationSpec& spec, const Window& w);

// #{q in N^n : min_j <p_j,q> = l}.
Int m_l_count(const FiltrationSpec& spec, Int l);

// Three one-variable series on [0, hi] whose pairwise comparison probes the
// collapsed-weight counting identities: (a) counts by psi level, (b) counts
// by unnormalized min level, (c) diagonal of the ambient Poincare series.
// Equality is reported, not assumed.
struct WeightedCountsReport {
  TruncatedSeries by_psi;
  TruncatedSeries by_min_level;
  TruncatedSeries ambient_diagonal;
  CompareResult psi_vs_min;       // (a) vs (b)
  CompareResult psi_vs_diagonal;  // (a) vs (c)
  CompareResult min_vs_diagonal;  // (b) vs (c)
};

WeightedCountsReport weighted_counts_report(const FiltrationSpec& spec, Int hi);

}  // namespace nfw
