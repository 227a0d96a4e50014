#include "nfw/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "nfw/fan.hpp"

namespace nfw {

namespace {

// Enumerates q in the box [0, hi] componentwise; hi entries may be negative,
// in which case the box is empty.
template <typename Fn>
void for_each_point(const IntVec& hi, Fn&& fn) {
  for (Int h : hi) {
    if (h < 0) return;
  }
  const Window box = Window::box(IntVec(hi.size(), 0), hi);
  const size_t total = box.size();
  for (size_t idx = 0; idx < total; ++idx) fn(box.mu_at(idx));
}

}  // namespace

IntVec existential_box(const FiltrationSpec& spec, const IntVec& reach) {
  IntVec hi(static_cast<size_t>(spec.n), -1);
  for (int j = 0; j < spec.r(); ++j) {
    if (reach[static_cast<size_t>(j)] < 0) continue;
    for (int i = 0; i < spec.n; ++i) {
      const Int b = reach[static_cast<size_t>(j)] / spec.normals[static_cast<size_t>(j)][static_cast<size_t>(i)];
      hi[static_cast<size_t>(i)] = std::max(hi[static_cast<size_t>(i)], b);
    }
  }
  return hi;
}

void validate(const FiltrationSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("FiltrationSpec: need at least one variable");
  if (spec.normals.empty()) throw std::invalid_argument("FiltrationSpec: need at least one weight row");
  if (spec.offsets.size() != spec.normals.size()) {
    throw std::invalid_argument("FiltrationSpec: one threshold per weight row required");
  }
  for (const auto& p : spec.normals) {
    if (static_cast<int>(p.size()) != spec.n) throw std::invalid_argument("FiltrationSpec: row arity mismatch");
    for (Int c : p) {
      if (c <= 0) throw std::invalid_argument("FiltrationSpec: weight rows must be strictly positive");
    }
  }
  for (Int v : spec.offsets) {
    if (v < 1) throw std::invalid_argument("FiltrationSpec: thresholds must be positive");
  }
  if (spec.M < 1) throw std::invalid_argument("FiltrationSpec: M must be positive");
}

FiltrationSpec filtration_of(const NewtonPolyhedron& np, bool minimal_m) {
  FiltrationSpec spec;
  spec.n = np.n;
  spec.normals = np.normals();
  spec.offsets = np.offsets();
  spec.M = compute_M(spec.normals, spec.offsets, minimal_m);
  validate(spec);
  return spec;
}

IntVec value_of(const FiltrationSpec& spec, const IntVec& q) {
  if (static_cast<int>(q.size()) != spec.n) throw std::invalid_argument("value_of: arity mismatch");
  IntVec v(spec.normals.size());
  for (size_t j = 0; j < spec.normals.size(); ++j) {
    Int acc = 0;
    for (size_t i = 0; i < q.size(); ++i) acc = checked_add(acc, checked_mul(spec.normals[j][i], q[i]));
    v[j] = acc;
  }
  return v;
}

Int dim_graded_ambient(const FiltrationSpec& spec, const IntVec& mu) {
  if (static_cast<int>(mu.size()) != spec.r()) throw std::invalid_argument("dim_graded_ambient: arity mismatch");
  Int count = 0;
  for_each_point(existential_box(spec, mu), [&](const IntVec& q) {
    const IntVec v = value_of(spec, q);
    bool all_ge = true, some_le = false;
    for (size_t j = 0; j < mu.size(); ++j) {
      all_ge = all_ge && v[j] >= mu[j];
      some_le = some_le || v[j] <= mu[j];
    }
    if (all_ge && some_le) ++count;
  });
  return count;
}

TruncatedSeries l_series_direct(const FiltrationSpec& spec, const Window& w) {
  if (w.r() != spec.r()) throw std::invalid_argument("l_series_direct: arity mismatch");
  TruncatedSeries s = TruncatedSeries::unknown(w);
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    s.set(mu, BigInt(dim_graded_ambient(spec, mu)));
  }
  // The existential condition <p_j,q> <= mu_j is unsatisfiable on N^n once
  // every mu_j is negative.
  s.set_diag_vanish(0);
  return s;
}

TruncatedSeries ambient_poincare(const FiltrationSpec& spec, const Window& w) {
  std::vector<IntVec> columns(static_cast<size_t>(spec.n), IntVec(spec.normals.size()));
  for (size_t j = 0; j < spec.normals.size(); ++j) {
    for (size_t i = 0; i < columns.size(); ++i) columns[i][j] = spec.normals[j][i];
  }
  return geometric_product(columns, w);
}

Int psi(const FiltrationSpec& spec, const IntVec& q) {
  const IntVec v = value_of(spec, q);
  Rational best;
  bool first = true;
  for (size_t j = 0; j < v.size(); ++j) {
    const Rational cand = Rational(v[j]) / Rational(spec.offsets[j]);
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  Rational scaled = best * Rational(spec.M);
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw std::logic_error("psi: M does not clear the minimum's denominator");
  if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("psi: value out of range");
  return static_cast<Int>(scaled.get_num().get_si());
}

Int dim_one_index(const FiltrationSpec& spec, Int l) {
  if (l < 0) return 0;
  // psi(q) = l forces <p_j,q> = l*nu_j/M for some j.
  IntVec reach(spec.offsets.size());
  for (size_t j = 0; j < reach.size(); ++j) reach[j] = checked_mul(l, spec.offsets[j]) / spec.M;
  Int count = 0;
  for_each_point(existential_box(spec, reach), [&](const IntVec& q) {
    if (psi(spec, q) == l) ++count;
  });
  return count;
}

TruncatedSeries p_hat_direct(const FiltrationSpec& spec, const Window& w) {
  if (w.r() != 1) throw std::invalid_argument("p_hat_direct: one-variable window required");
  TruncatedSeries s = TruncatedSeries::unknown(w);
  for (Int l = w.lo[0]; l <= w.hi[0]; ++l) s.set({l}, BigInt(dim_one_index(spec, l)));
  s.set_support_min({0});
  return s;
}

Int m_l_count(const FiltrationSpec& spec, Int l) {
  if (l < 0) return 0;
  Int count = 0;
  for_each_point(existential_box(spec, IntVec(spec.offsets.size(), l)), [&](const IntVec& q) {
    const IntVec v = value_of(spec, q);
    Int mn = v[0];
    for (Int c : v) mn = std::min(mn, c);
    if (mn == l) ++count;
  });
  return count;
}

WeightedCountsReport weighted_counts_report(const FiltrationSpec& spec, Int hi) {
  if (hi < 0) throw std::invalid_argument("weighted_counts_report: nonnegative bound required");
  const Window w1 = Window::cube(1, 0, hi);
  WeightedCountsReport report{
      .by_psi = p_hat_direct(spec, w1),
      .by_min_level = TruncatedSeries::unknown(w1),
      .ambient_diagonal = TruncatedSeries::unknown(w1),
      .psi_vs_min = {},
      .psi_vs_diagonal = {},
      .min_vs_diagonal = {},
  };
  for (Int l = 0; l <= hi; ++l) report.by_min_level.set({l}, BigInt(m_l_count(spec, l)));
  report.by_min_level.set_support_min({0});
  const TruncatedSeries amb = ambient_poincare(spec, Window::cube(spec.r(), 0, hi));
  report.ambient_diagonal = diagonal(amb);
  report.psi_vs_min = compare_on_window(report.by_psi, report.by_min_level, w1);
  report.psi_vs_diagonal = compare_on_window(report.by_psi, report.ambient_diagonal, w1);
  report.min_vs_diagonal = compare_on_window(report.by_min_level, report.ambient_diagonal, w1);
  return report;
}

}  // namespace nfw
