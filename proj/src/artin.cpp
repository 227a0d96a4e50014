#include "nfw/artin.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nfw {

namespace {

constexpr size_t kBasisCap = size_t(1) << 22;

// Unit rows for the basis monomials satisfying pred, spanned as a subspace.
template <typename Pred>
Subspace level_span(const ArtinianQuotient& a, Pred&& pred) {
  QMat rows;
  for (size_t i = 0; i < a.basis.size(); ++i) {
    if (!pred(a.basis[i])) continue;
    QVec unit(a.basis.size(), Rational(0));
    unit[i] = 1;
    rows.push_back(std::move(unit));
  }
  return Subspace::span(std::move(rows), a.dim());
}

bool is_nonzero(const QVec& v) {
  return std::any_of(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
}

// Ideal image rows restricted to multipliers m accepted by keep(i, m).
template <typename Keep>
Subspace ideal_image_filtered(const ArtinianQuotient& a, const std::vector<Polynomial>& gs,
                              Keep&& keep) {
  QMat rows;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].is_zero()) throw std::invalid_argument("ideal image: zero generator");
    if (gs[i].nvars() != a.spec.n) throw std::invalid_argument("ideal image: arity mismatch");
    for (const auto& m : a.basis) {
      if (!keep(i, m)) continue;
      QVec v = class_vector(a, gs[i].shifted(Exponent(m)));
      if (is_nonzero(v)) rows.push_back(std::move(v));
    }
  }
  return Subspace::span(std::move(rows), a.dim());
}

}  // namespace

ArtinianQuotient artinian_basis(const FiltrationSpec& spec, const IntVec& mu) {
  validate(spec);
  if (static_cast<int>(mu.size()) != spec.r()) {
    throw std::invalid_argument("artinian_basis: one threshold per weight row required");
  }
  ArtinianQuotient a{spec, mu, {}, {}};
  const IntVec hi = existential_box(spec, mu);
  if (std::all_of(hi.begin(), hi.end(), [](Int h) { return h >= 0; })) {
    const Window box = Window::box(IntVec(hi.size(), 0), hi);
    const size_t total = box.size();
    if (total > kBasisCap) throw std::overflow_error("artinian_basis: quotient too large");
    for (size_t idx = 0; idx < total; ++idx) {
      IntVec q = box.mu_at(idx);
      const IntVec v = value_of(spec, q);
      for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] <= mu[j]) {
          a.basis.push_back(std::move(q));
          break;
        }
      }
    }
  }
  std::sort(a.basis.begin(), a.basis.end());
  for (size_t i = 0; i < a.basis.size(); ++i) a.index.emplace(a.basis[i], i);
  return a;
}

ArtinianQuotient one_index_quotient(const FiltrationSpec& spec, Int l) {
  validate(spec);
  ArtinianQuotient a{spec, IntVec{l}, {}, {}};
  if (l >= 0) {
    IntVec reach(spec.offsets.size());
    for (size_t j = 0; j < reach.size(); ++j) reach[j] = checked_mul(l, spec.offsets[j]) / spec.M;
    const IntVec hi = existential_box(spec, reach);
    if (std::all_of(hi.begin(), hi.end(), [](Int h) { return h >= 0; })) {
      const Window box = Window::box(IntVec(hi.size(), 0), hi);
      const size_t total = box.size();
      if (total > kBasisCap) throw std::overflow_error("one_index_quotient: quotient too large");
      for (size_t idx = 0; idx < total; ++idx) {
        IntVec q = box.mu_at(idx);
        if (psi(spec, q) <= l) a.basis.push_back(std::move(q));
      }
    }
  }
  std::sort(a.basis.begin(), a.basis.end());
  for (size_t i = 0; i < a.basis.size(); ++i) a.index.emplace(a.basis[i], i);
  return a;
}

QVec class_vector(const ArtinianQuotient& a, const Polynomial& g) {
  if (g.nvars() != a.spec.n) throw std::invalid_argument("class_vector: arity mismatch");
  QVec v(a.basis.size(), Rational(0));
  for (const auto& [e, c] : g.terms()) {
    const auto it = a.index.find(e.e);
    if (it != a.index.end()) v[it->second] += c;
  }
  return v;
}

Subspace ideal_image(const ArtinianQuotient& a, const std::vector<Polynomial>& gs) {
  return ideal_image_filtered(a, gs, [](size_t, const IntVec&) { return true; });
}

Int induced_dim(const FiltrationSpec& spec, const IntVec& mu, const std::vector<Polynomial>& gs) {
  const ArtinianQuotient a = artinian_basis(spec, mu);
  const Subspace ideal = ideal_image(a, gs);
  const Subspace level = level_span(a, [&](const IntVec& q) {
    const IntVec v = value_of(spec, q);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] < mu[j]) return false;
    }
    return true;
  });
  return level.sum(ideal).dim() - ideal.dim();
}

Int bar_dim(const FiltrationSpec& spec, const IntVec& mu, const std::vector<Polynomial>& gs,
            const std::vector<IntVec>& nu_rows) {
  if (nu_rows.size() != gs.size()) throw std::invalid_argument("bar_dim: one nu row per generator");
  for (const auto& row : nu_rows) {
    if (static_cast<int>(row.size()) != spec.r()) throw std::invalid_argument("bar_dim: nu row arity");
  }
  const ArtinianQuotient a = artinian_basis(spec, mu);
  const Subspace ideal = ideal_image_filtered(a, gs, [&](size_t i, const IntVec& m) {
    const IntVec v = value_of(spec, m);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] < mu[j] - nu_rows[i][j]) return false;
    }
    return true;
  });
  const Subspace level = level_span(a, [&](const IntVec& q) {
    const IntVec v = value_of(spec, q);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] < mu[j]) return false;
    }
    return true;
  });
  return level.sum(ideal).dim() - ideal.dim();
}

bool level_intersection_equal(const FiltrationSpec& spec, const IntVec& mu,
                              const std::vector<Polynomial>& gs) {
  for (Int m : mu) {
    if (m < 0) throw std::invalid_argument("level_intersection_equal: thresholds must be nonnegative");
  }
  const ArtinianQuotient a = artinian_basis(spec, mu);
  const Subspace ideal = ideal_image(a, gs);
  const Subspace joint = level_span(a, [&](const IntVec& q) {
                           const IntVec v = value_of(spec, q);
                           for (size_t j = 0; j < v.size(); ++j) {
                             if (v[j] < mu[j]) return false;
                           }
                           return true;
                         }).sum(ideal);
  Subspace inter;
  for (size_t l = 0; l < mu.size(); ++l) {
    const Subspace single = level_span(a, [&](const IntVec& q) {
                              return value_of(spec, q)[l] >= mu[l];
                            }).sum(ideal);
    inter = l == 0 ? single : inter.intersect(single);
  }
  return joint == inter;
}

Int induced_dim_one(const FiltrationSpec& spec, Int l, const std::vector<Polynomial>& gs) {
  if (l < 0) return 0;
  const ArtinianQuotient a = one_index_quotient(spec, l);
  const Subspace ideal = ideal_image(a, gs);
  const Subspace level = level_span(a, [&](const IntVec& q) { return psi(spec, q) >= l; });
  return level.sum(ideal).dim() - ideal.dim();
}

Int bar_dim_one(const FiltrationSpec& spec, Int l, const std::vector<Polynomial>& gs,
                const IntVec& rho) {
  if (l < 0) return 0;
  if (rho.size() != gs.size()) throw std::invalid_argument("bar_dim_one: one order per generator");
  const ArtinianQuotient a = one_index_quotient(spec, l);
  const Subspace ideal = ideal_image_filtered(a, gs, [&](size_t i, const IntVec& m) {
    return psi(spec, m) >= l - rho[i];
  });
  const Subspace level = level_span(a, [&](const IntVec& q) { return psi(spec, q) >= l; });
  return level.sum(ideal).dim() - ideal.dim();
}

Int rho_of(const FiltrationSpec& spec, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("rho_of: zero polynomial has no order");
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : g.terms()) {
    const Int v = psi(spec, e.e);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Int quotient_total_dim(const std::vector<Polynomial>& gs, Int max_depth) {
  if (gs.empty()) throw std::invalid_argument("quotient_total_dim: need generators");
  const int n = gs[0].nvars();
  if (static_cast<int>(gs.size()) != n) {
    throw std::invalid_argument("quotient_total_dim: need exactly one generator per variable");
  }
  if (max_depth < 2) throw std::invalid_argument("quotient_total_dim: depth cap too small");
  const FiltrationSpec degree_cut{n, {IntVec(static_cast<size_t>(n), 1)}, IntVec{1}, 1};

  Int c = 2;
  while (true) {
    const ArtinianQuotient a = artinian_basis(degree_cut, {c});
    const Subspace ideal = ideal_image(a, gs);
    // Smallest pure power of each variable absorbed by the ideal image; the
    // power c+1 is deep (class zero) and always qualifies.
    Int t = 1;
    for (int i = 0; i < n; ++i) {
      Int found = c + 1;
      for (Int pw = 1; pw <= c; ++pw) {
        IntVec q(static_cast<size_t>(n), 0);
        q[static_cast<size_t>(i)] = pw;
        QVec unit(a.basis.size(), Rational(0));
        unit[a.index.at(q)] = 1;
        if (ideal.contains(unit)) {
          found = pw;
          break;
        }
      }
      t += found - 1;
    }
    if (t <= c) return a.dim() - ideal.dim();
    if (c >= max_depth) break;
    c = std::min(checked_mul(c, 2), max_depth);
  }
  throw std::runtime_error(
      "quotient_total_dim: no stabilization certificate within the depth cap; dimension possibly "
      "infinite");
}

GradedReport graded_report(const FiltrationSpec& spec, const std::vector<Polynomial>& gs,
                           const std::vector<IntVec>& nu_rows, const Window& w) {
  if (w.r() != spec.r()) throw std::invalid_argument("graded_report: window arity mismatch");
  GradedReport report;
  const size_t total = w.size();
  report.rows.reserve(total);
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    report.rows.push_back({mu, dim_graded_ambient(spec, mu), induced_dim(spec, mu, gs),
                           bar_dim(spec, mu, gs, nu_rows)});
  }
  return report;
}

std::string graded_report_to_json(const GradedReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({row.mu, row.ambient, row.induced, row.bar});
  }
  return rows.dump();
}

}  // namespace nfw
