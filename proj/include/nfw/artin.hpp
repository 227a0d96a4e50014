#pragma once

#include <map>
#include <string>

#include "nfw/lattice.hpp"
#include "nfw/linalg.hpp"
#include "nfw/polynomial.hpp"

namespace nfw {

// Finite-dimensional monomial quotient of the power-series ring: the classes
// of monomials z^q whose weight vector dips to or under the threshold in at
// least one row.  Everything deeper is truncated to zero, which makes every
// dimension below an exact finite linear-algebra computation.
struct ArtinianQuotient {
  FiltrationSpec spec;
  IntVec mu;                       // one threshold per weight row
  std::vector<IntVec> basis;       // sorted lexicographically
  std::map<IntVec, size_t> index;  // exponent -> basis position

  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis {q in N^n : <p_j,q> <= mu_j for some j}.  Finite because the weight
// rows are strictly positive (validated); throws std::overflow_error when the
// enumeration box exceeds the resource cap.
ArtinianQuotient artinian_basis(const FiltrationSpec& spec, const IntVec& mu);

// Rank-one analogue cut by the collapsed weight: basis {q : psi(q) <= l}.
ArtinianQuotient one_index_quotient(const FiltrationSpec& spec, Int l);

// Coordinates of the class of g: terms outside the basis are truncated away.
QVec class_vector(const ArtinianQuotient& a, const Polynomial& g);

// Image of the ideal (g_1,...,g_k) in the quotient, spanned by the classes of
// m*g_i for basis monomials m (deeper multipliers only produce zero classes).
Subspace ideal_image(const ArtinianQuotient& a, const std::vector<Polynomial>& gs);

// Graded dimension at mu of the filtration induced on O/(g_1,...,g_k):
// dim(span of level-mu monomial classes + ideal image) - dim(ideal image).
Int induced_dim(const FiltrationSpec& spec, const IntVec& mu, const std::vector<Polynomial>& gs);

// dim F_mu / (F_{mu+1} + g_1 F_{mu-nu_1} + ... + g_k F_{mu-nu_k}), where the
// ideal image is generated only by multiples m*g_i with value(m) >= mu-nu_i.
Int bar_dim(const FiltrationSpec& spec, const IntVec& mu, const std::vector<Polynomial>& gs,
            const std::vector<IntVec>& nu_rows);

// True when, on O/(g_1,...,g_k), the mu-level subspace of the induced
// filtration equals the intersection of its single-row relaxations (row j
// held at mu_j, the others dropped to zero).
bool level_intersection_equal(const FiltrationSpec& spec, const IntVec& mu,
                              const std::vector<Polynomial>& gs);

// One-index (collapsed-weight) analogues on O/(g_1,...,g_k).
Int induced_dim_one(const FiltrationSpec& spec, Int l, const std::vector<Polynomial>& gs);
Int bar_dim_one(const FiltrationSpec& spec, Int l, const std::vector<Polynomial>& gs,
                const IntVec& rho);

// Order of g under the collapsed weight: min of psi over the support.
// Throws std::invalid_argument for the zero polynomial.
Int rho_of(const FiltrationSpec& spec, const Polynomial& g);

// dim O/(g_1,...,g_n) for an ideal expected to be zero-dimensional, computed
// through deepening total-degree cuts.  The returned value is certified by a
// pure-power argument: once z_i^{N_i} lies in the ideal image for each i and
// the cut depth c satisfies c >= 1 + sum_i (N_i - 1), every deep monomial is
// absorbed into the ideal and the dimension can no longer change.  Throws
// std::runtime_error when no certificate appears within max_depth.
Int quotient_total_dim(const std::vector<Polynomial>& gs, Int max_depth = 64);

struct GradedRow {
  IntVec mu;
  Int ambient = 0;
  Int induced = 0;
  Int bar = 0;
};

struct GradedReport {
  std::vector<GradedRow> rows;
};

GradedReport graded_report(const FiltrationSpec& spec, const std::vector<Polynomial>& gs,
                           const std::vector<IntVec>& nu_rows, const Window& w);

// JSON array of [mu, ambient, induced, bar] entries.
std::string graded_report_to_json(const GradedReport& report);

}  // namespace nfw
