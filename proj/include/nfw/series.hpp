#pragma once

#include <optional>
#include <string>

#include "nfw/base.hpp"

namespace nfw {

// Inclusive coefficient box in Z^r.
struct Window {
  IntVec lo, hi;

  static Window box(IntVec lo, IntVec hi);
  static Window cube(int r, Int lo, Int hi);

  int r() const { return static_cast<int>(lo.size()); }
  bool contains(const IntVec& mu) const;
  size_t size() const;
  size_t index_of(const IntVec& mu) const;  // lexicographic rank
  IntVec mu_at(size_t idx) const;
  bool operator==(const Window& other) const { return lo == other.lo && hi == other.hi; }
};

// Formal series known exactly on part of a window.  Two optional global facts
// extend knowledge beyond the window: `support_min b` (coefficient is zero
// unless mu >= b componentwise) and `diag_vanish d` (zero whenever
// max_j mu_j < d).  Every consumer goes through known(), so an entry is
// either provably correct or reported as unknown, never silently wrong.
class TruncatedSeries {
 public:
  static TruncatedSeries zeros(const Window& w);    // exact zero everywhere in the window
  static TruncatedSeries unknown(const Window& w);  // nothing known

  int r() const { return window_.r(); }
  const Window& window() const { return window_; }

  std::optional<BigInt> known(const IntVec& mu) const;
  bool exact_at(const IntVec& mu) const;
  void set(const IntVec& mu, BigInt value);
  void mark_unknown(const IntVec& mu);

  void set_support_min(IntVec b);
  void set_diag_vanish(Int d);
  std::optional<IntVec> support_min() const;
  std::optional<Int> diag_vanish() const;

 private:
  explicit TruncatedSeries(const Window& w);
  Window window_;
  std::vector<BigInt> coeff_;
  std::vector<char> exact_;
  bool has_support_min_ = false;
  IntVec support_min_b_;
  bool has_diag_vanish_ = false;
  Int diag_vanish_d_ = 0;
};

// Product over columns c of 1/(1 - t^c), the generating series of the
// monoid sums; every column must be nonzero and nonnegative.
TruncatedSeries geometric_product(const std::vector<IntVec>& columns, const Window& w);

// (1 - t^shift) * s for a nonnegative shift.
TruncatedSeries mul_one_minus(const TruncatedSeries& s, const IntVec& shift);

// Window an existing series (flags still apply outside).
TruncatedSeries restrict_to(const TruncatedSeries& s, const Window& w);

// Smallest input window on which the filtration series must be known so the
// transform below is exact on `out`.
Window transform_input_window(const Window& out);

// P(mu) = -sum_{m>=0} Q(mu - m*(1,..,1)) with Q = L * prod_j (t_j - 1); the
// diagonal sum terminates through L's diag_vanish fact (or, failing that, the
// bound min_i b_i derived from a support_min fact).
TruncatedSeries filtration_transform(const TruncatedSeries& l, const Window& out);

// Inverse of the transform above:
//   L(mu) = (-1)^r sum_{m in N^r} [P(mu - m - 1) - P(mu - m)],
// a finite sum because P carries a support_min fact b.  The result inherits
// support_min b.  P must be exactly known on box [b, max(out.hi, b)].
// This is the unique preimage whose support is bounded below by b; preimages
// with unbounded support (such as raw graded counts for r >= 2) differ from
// it off the diagonal.
TruncatedSeries inverse_filtration_transform(const TruncatedSeries& p, const Window& out);

// The box on which the input of inverse_filtration_transform must be exact.
Window inverse_transform_input_window(const Window& out, const IntVec& support_min);

struct CompareResult {
  bool equal = true;
  std::string detail;  // first difference or missing entry
};

// Both series must be exactly known on every point of w and agree there.
CompareResult compare_on_window(const TruncatedSeries& a, const TruncatedSeries& b, const Window& w);

bool is_zero_on(const TruncatedSeries& s, const Window& w);

BigInt coefficient(const TruncatedSeries& s, const IntVec& mu);  // throws when unknown

// Sum of all entries; requires every window entry exact.
BigInt sum_exact(const TruncatedSeries& s);

// Evaluation at t = 1 of a series believed to be a polynomial: requires every
// window entry exact and every entry on the outer boundary shell (some
// mu_j = hi_j) zero; otherwise throws ("non-polynomial tail detected").
BigInt sum_of_coefficients(const TruncatedSeries& s);

// One-variable series of the diagonal entries d(l) = s(l,..,l), defined on
// [max_i lo_i, min_i hi_i] (which must be nonempty).
TruncatedSeries diagonal(const TruncatedSeries& s);

std::string series_to_json(const TruncatedSeries& s, int indent = -1);

}  // namespace nfw
