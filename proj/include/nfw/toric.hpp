#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "nfw/fan.hpp"
#include "nfw/lattice.hpp"
#include "nfw/series.hpp"

namespace nfw {

// Pair of index sets stored as bitmasks: bit i of `vars` marks a condition on
// the i-th coordinate, bit j of `rows` a condition on the j-th weight row.
// Intersection and containment act componentwise on the two masks.
struct IndexPair {
  std::uint32_t vars = 0;
  std::uint32_t rows = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

inline IndexPair pair_intersect(const IndexPair& a, const IndexPair& b) {
  return {a.vars & b.vars, a.rows & b.rows};
}

inline bool pair_subset(const IndexPair& a, const IndexPair& b) {
  return (a.vars & ~b.vars) == 0 && (a.rows & ~b.rows) == 0;
}

// Generator index sets of each maximal cone: which axis directions and which
// facet-normal labels occur among its rays.  Rays introduced by subdivision
// carry no label and contribute to neither mask.
struct ConeIndexData {
  int n = 0;
  int r = 0;
  std::vector<IndexPair> cones;  // aligned with fan.maximal_cones
};

ConeIndexData cone_index_data(const SimplicialFan& fan, int r);

// Index pair of an integer exponent q (negative entries allowed) at
// threshold mu: vars = {i : q_i >= 0}, rows = {j : <p_j,q> >= mu_j}.
IndexPair i_mu_q(const FiltrationSpec& spec, const IntVec& mu, const IntVec& q);

// Nerve Euler characteristic: sum over nonempty subsets Lambda of the maximal
// cones of (-1)^{|Lambda|-1} [ intersection of their index pairs lies in I ].
Int chi_i(const ConeIndexData& data, const IndexPair& I);

// Counts of exponents q keyed by (index pair at mu, index pair at mu+1) over
// an enumeration box certified by a boundary-vanishing check: the box is
// widened until every point of one more shell carries chi weight zero.
struct PairCounts {
  std::map<std::pair<IndexPair, IndexPair>, Int> counts;
  IntVec box_lo;
  IntVec box_hi;
};

PairCounts n_ij_mu(const FiltrationSpec& spec, const ConeIndexData& data, const IntVec& mu);

// One series coefficient: sum of n * (chi_I - chi_J) over the pair counts.
Int l_toric_coefficient(const FiltrationSpec& spec, const ConeIndexData& data, const IntVec& mu);

// The combinatorial Euler-characteristic series on a window.
TruncatedSeries l_toric(const FiltrationSpec& spec, const SimplicialFan& fan, const Window& w);

// CSV rows "mu,I,J,count,chi_I,chi_J" for inspection.
std::string pair_counts_csv(const FiltrationSpec& spec, const ConeIndexData& data,
                            const IntVec& mu);

}  // namespace nfw
