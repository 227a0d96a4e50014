#include "nfw/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nfw {

Window Window::box(IntVec lo, IntVec hi) {
  if (lo.size() != hi.size() || lo.empty()) throw std::invalid_argument("Window::box: bad bounds");
  for (size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("Window::box: empty axis range");
  }
  return Window{std::move(lo), std::move(hi)};
}

Window Window::cube(int r, Int lo, Int hi) {
  return box(IntVec(static_cast<size_t>(r), lo), IntVec(static_cast<size_t>(r), hi));
}

bool Window::contains(const IntVec& mu) const {
  if (mu.size() != lo.size()) return false;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < lo[i] || mu[i] > hi[i]) return false;
  }
  return true;
}

size_t Window::size() const {
  size_t total = 1;
  for (size_t i = 0; i < lo.size(); ++i) {
    const size_t extent = static_cast<size_t>(hi[i] - lo[i] + 1);
    if (extent != 0 && total > (static_cast<size_t>(1) << 40) / extent) {
      throw std::overflow_error("Window::size: box too large");
    }
    total *= extent;
  }
  return total;
}

size_t Window::index_of(const IntVec& mu) const {
  size_t idx = 0;
  for (size_t i = 0; i < lo.size(); ++i) {
    idx = idx * static_cast<size_t>(hi[i] - lo[i] + 1) + static_cast<size_t>(mu[i] - lo[i]);
  }
  return idx;
}

IntVec Window::mu_at(size_t idx) const {
  IntVec mu(lo.size());
  for (size_t i = lo.size(); i-- > 0;) {
    const size_t extent = static_cast<size_t>(hi[i] - lo[i] + 1);
    mu[i] = lo[i] + static_cast<Int>(idx % extent);
    idx /= extent;
  }
  return mu;
}

TruncatedSeries::TruncatedSeries(const Window& w)
    : window_(w), coeff_(w.size()), exact_(w.size(), 0) {}

TruncatedSeries TruncatedSeries::zeros(const Window& w) {
  TruncatedSeries s(w);
  std::fill(s.exact_.begin(), s.exact_.end(), 1);
  return s;
}

TruncatedSeries TruncatedSeries::unknown(const Window& w) { return TruncatedSeries(w); }

std::optional<BigInt> TruncatedSeries::known(const IntVec& mu) const {
  if (mu.size() != window_.lo.size()) throw std::invalid_argument("TruncatedSeries::known: arity mismatch");
  if (window_.contains(mu)) {
    const size_t idx = window_.index_of(mu);
    if (exact_[idx]) return coeff_[idx];
  }
  if (has_support_min_) {
    for (size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] < support_min_b_[i]) return BigInt(0);
    }
  }
  if (has_diag_vanish_) {
    Int mx = mu[0];
    for (Int c : mu) mx = std::max(mx, c);
    if (mx < diag_vanish_d_) return BigInt(0);
  }
  return std::nullopt;
}

bool TruncatedSeries::exact_at(const IntVec& mu) const { return known(mu).has_value(); }

void TruncatedSeries::set(const IntVec& mu, BigInt value) {
  if (!window_.contains(mu)) throw std::out_of_range("TruncatedSeries::set: outside window");
  const size_t idx = window_.index_of(mu);
  coeff_[idx] = std::move(value);
  exact_[idx] = 1;
}

void TruncatedSeries::mark_unknown(const IntVec& mu) {
  if (!window_.contains(mu)) throw std::out_of_range("TruncatedSeries::mark_unknown: outside window");
  const size_t idx = window_.index_of(mu);
  coeff_[idx] = 0;
  exact_[idx] = 0;
}

void TruncatedSeries::set_support_min(IntVec b) {
  if (b.size() != window_.lo.size()) throw std::invalid_argument("set_support_min: arity mismatch");
  has_support_min_ = true;
  support_min_b_ = std::move(b);
}

void TruncatedSeries::set_diag_vanish(Int d) {
  has_diag_vanish_ = true;
  diag_vanish_d_ = d;
}

std::optional<IntVec> TruncatedSeries::support_min() const {
  if (!has_support_min_) return std::nullopt;
  return support_min_b_;
}

std::optional<Int> TruncatedSeries::diag_vanish() const {
  if (!has_diag_vanish_) return std::nullopt;
  return diag_vanish_d_;
}

TruncatedSeries geometric_product(const std::vector<IntVec>& columns, const Window& w) {
  const int r = w.r();
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != r) throw std::invalid_argument("geometric_product: column arity");
    bool nonzero = false;
    for (Int x : c) {
      if (x < 0) throw std::invalid_argument("geometric_product: negative column entry");
      nonzero = nonzero || x > 0;
    }
    if (!nonzero) throw std::invalid_argument("geometric_product: zero column");
  }
  // Work on the window extended down to 0 so every recurrence dependency is
  // either inside the box or provably zero (some coordinate negative).
  IntVec lo = w.lo, hi = w.hi;
  for (int i = 0; i < r; ++i) {
    lo[i] = std::min<Int>(lo[i], 0);
    hi[i] = std::max<Int>(hi[i], 0);
  }
  const Window full = Window::box(lo, hi);
  TruncatedSeries s = TruncatedSeries::zeros(full);
  s.set(IntVec(static_cast<size_t>(r), 0), BigInt(1));
  const size_t total = full.size();
  for (const auto& col : columns) {
    for (size_t idx = 0; idx < total; ++idx) {
      const IntVec mu = full.mu_at(idx);
      IntVec prev(mu.size());
      bool in_box = true;
      bool below_zero = false;
      for (int i = 0; i < r; ++i) {
        prev[i] = mu[i] - col[i];
        if (prev[i] < full.lo[i] || prev[i] > full.hi[i]) in_box = false;
        if (prev[i] < 0) below_zero = true;
      }
      if (below_zero || !in_box) continue;  // dependency is zero
      const BigInt add = coefficient(s, prev);
      if (add != 0) s.set(mu, coefficient(s, mu) + add);
    }
  }
  TruncatedSeries out = restrict_to(s, w);
  out.set_support_min(IntVec(static_cast<size_t>(r), 0));
  return out;
}

TruncatedSeries mul_one_minus(const TruncatedSeries& s, const IntVec& shift) {
  if (static_cast<int>(shift.size()) != s.r()) throw std::invalid_argument("mul_one_minus: arity mismatch");
  for (Int x : shift) {
    if (x < 0) throw std::invalid_argument("mul_one_minus: negative shift");
  }
  const Window& w = s.window();
  TruncatedSeries out = TruncatedSeries::unknown(w);
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    const auto here = s.known(mu);
    if (!here) continue;
    const auto back = s.known(vec_sub(mu, shift));
    if (!back) continue;
    out.set(mu, *here - *back);
  }
  if (auto b = s.support_min()) out.set_support_min(*b);
  if (auto d = s.diag_vanish()) out.set_diag_vanish(*d);
  return out;
}

TruncatedSeries restrict_to(const TruncatedSeries& s, const Window& w) {
  if (w.r() != s.r()) throw std::invalid_argument("restrict_to: arity mismatch");
  TruncatedSeries out = TruncatedSeries::unknown(w);
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    if (auto v = s.known(mu)) out.set(mu, *v);
  }
  if (auto b = s.support_min()) out.set_support_min(*b);
  if (auto d = s.diag_vanish()) out.set_diag_vanish(*d);
  return out;
}

Window transform_input_window(const Window& out) {
  Int mx = out.hi[0];
  for (Int h : out.hi) mx = std::max(mx, h);
  IntVec lo = out.lo, hi = out.hi;
  for (size_t i = 0; i < lo.size(); ++i) {
    // Depth of the diagonal chain plus the unit shifts from the multiplier.
    lo[i] = checked_sub(lo[i], checked_add(mx, 2));
  }
  return Window::box(lo, hi);
}

TruncatedSeries filtration_transform(const TruncatedSeries& l, const Window& out) {
  if (l.r() != out.r()) throw std::invalid_argument("filtration_transform: arity mismatch");
  const int r = out.r();
  // Vanishing bound: coefficients of l are zero whenever max_j mu_j < d.  A
  // support_min fact b gives the same guarantee with d = min_i b_i.
  std::optional<Int> dv = l.diag_vanish();
  if (!dv) {
    if (auto b = l.support_min()) {
      Int d = (*b)[0];
      for (Int c : *b) d = std::min(d, c);
      dv = d;
    }
  }
  if (!dv) throw std::invalid_argument("filtration_transform: input needs a vanishing fact");

  // Q = L * prod_j (t_j - 1): 2^r signed unit shifts.
  const auto q_at = [&](const IntVec& mu) -> std::optional<BigInt> {
    BigInt acc(0);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      IntVec back = mu;
      int ones = 0;
      for (int j = 0; j < r; ++j) {
        if (mask & (1u << j)) {
          back[j] -= 1;
          ++ones;
        }
      }
      const auto v = l.known(back);
      if (!v) return std::nullopt;
      if ((r - ones) % 2 == 0) {
        acc += *v;
      } else {
        acc -= *v;
      }
    }
    return acc;
  };

  TruncatedSeries p = TruncatedSeries::unknown(out);
  const size_t total = out.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = out.mu_at(idx);
    Int mx = mu[0];
    for (Int c : mu) mx = std::max(mx, c);
    // Terms with max coordinate below the vanishing bound are zero.
    const Int steps = std::max<Int>(0, mx - *dv + 1);
    BigInt acc(0);
    bool ok = true;
    for (Int m = 0; m < steps; ++m) {
      IntVec shifted(mu.size());
      for (size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] - m;
      const auto q = q_at(shifted);
      if (!q) {
        ok = false;
        break;
      }
      acc += *q;
    }
    if (ok) p.set(mu, -acc);
  }
  p.set_diag_vanish(*dv);
  return p;
}

Window inverse_transform_input_window(const Window& out, const IntVec& support_min) {
  if (support_min.size() != out.lo.size()) {
    throw std::invalid_argument("inverse_transform_input_window: arity mismatch");
  }
  IntVec lo = support_min, hi = out.hi;
  for (size_t i = 0; i < hi.size(); ++i) hi[i] = std::max(hi[i], lo[i]);
  return Window::box(std::move(lo), std::move(hi));
}

TruncatedSeries inverse_filtration_transform(const TruncatedSeries& p, const Window& out) {
  if (p.r() != out.r()) throw std::invalid_argument("inverse_filtration_transform: arity mismatch");
  const int r = out.r();
  const auto b = p.support_min();
  if (!b) throw std::invalid_argument("inverse_filtration_transform: input needs a support_min fact");

  TruncatedSeries l = TruncatedSeries::unknown(out);
  const size_t total = out.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = out.mu_at(idx);
    // Terms with m_i > mu_i - b_i vanish: both lookups then have a coordinate
    // below the support minimum.
    IntVec m_hi(mu.size());
    bool empty = false;
    for (size_t i = 0; i < mu.size(); ++i) {
      m_hi[i] = mu[i] - (*b)[i];
      if (m_hi[i] < 0) empty = true;
    }
    if (empty) {
      l.set(mu, BigInt(0));
      continue;
    }
    const Window m_box = Window::box(IntVec(mu.size(), 0), m_hi);
    BigInt acc(0);
    bool ok = true;
    const size_t m_total = m_box.size();
    for (size_t m_idx = 0; m_idx < m_total && ok; ++m_idx) {
      const IntVec m = m_box.mu_at(m_idx);
      IntVec at = vec_sub(mu, m);
      const auto near = p.known(at);
      for (size_t i = 0; i < at.size(); ++i) at[i] -= 1;
      const auto far = p.known(at);
      if (!near || !far) {
        ok = false;
        break;
      }
      acc += *far - *near;
    }
    if (ok) l.set(mu, (r % 2 == 0) ? acc : -acc);
  }
  l.set_support_min(*b);
  return l;
}

CompareResult compare_on_window(const TruncatedSeries& a, const TruncatedSeries& b, const Window& w) {
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    const auto va = a.known(mu);
    const auto vb = b.known(mu);
    std::string tag = "[";
    for (size_t i = 0; i < mu.size(); ++i) tag += (i ? "," : "") + std::to_string(mu[i]);
    tag += "]";
    if (!va || !vb) {
      return {false, "coefficient at " + tag + " not exactly known on " + (!va ? "left" : "right")};
    }
    if (*va != *vb) {
      return {false, "mismatch at " + tag + ": " + va->get_str() + " vs " + vb->get_str()};
    }
  }
  return {};
}

bool is_zero_on(const TruncatedSeries& s, const Window& w) {
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const auto v = s.known(w.mu_at(idx));
    if (!v || *v != 0) return false;
  }
  return true;
}

BigInt coefficient(const TruncatedSeries& s, const IntVec& mu) {
  const auto v = s.known(mu);
  if (!v) throw std::logic_error("coefficient: value not exactly known");
  return *v;
}

BigInt sum_exact(const TruncatedSeries& s) {
  BigInt acc(0);
  const size_t total = s.window().size();
  for (size_t idx = 0; idx < total; ++idx) {
    acc += coefficient(s, s.window().mu_at(idx));
  }
  return acc;
}

BigInt sum_of_coefficients(const TruncatedSeries& s) {
  const Window& w = s.window();
  BigInt acc(0);
  const size_t total = w.size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = w.mu_at(idx);
    const BigInt v = coefficient(s, mu);
    bool on_shell = false;
    for (size_t i = 0; i < mu.size(); ++i) on_shell = on_shell || mu[i] == w.hi[i];
    if (on_shell && v != 0) {
      throw std::runtime_error("sum_of_coefficients: non-polynomial tail detected");
    }
    acc += v;
  }
  return acc;
}

TruncatedSeries diagonal(const TruncatedSeries& s) {
  const Window& w = s.window();
  Int lo = w.lo[0], hi = w.hi[0];
  for (size_t i = 1; i < w.lo.size(); ++i) {
    lo = std::max(lo, w.lo[i]);
    hi = std::min(hi, w.hi[i]);
  }
  if (lo > hi) throw std::invalid_argument("diagonal: window has empty diagonal");
  TruncatedSeries out = TruncatedSeries::unknown(Window::cube(1, lo, hi));
  for (Int l = lo; l <= hi; ++l) {
    if (auto v = s.known(IntVec(w.lo.size(), l))) out.set({l}, *v);
  }
  Int bound_lo = lo;  // value below which the diagonal entry is provably zero
  bool have_bound = false;
  if (auto d = s.diag_vanish()) {
    bound_lo = *d;
    have_bound = true;
  }
  if (auto b = s.support_min()) {
    Int mx = (*b)[0];
    for (Int c : *b) mx = std::max(mx, c);
    bound_lo = have_bound ? std::max(bound_lo, mx) : mx;
    have_bound = true;
  }
  if (have_bound) out.set_support_min({bound_lo});
  return out;
}

std::string series_to_json(const TruncatedSeries& s, int indent) {
  nlohmann::json j;
  j["r"] = s.r();
  j["window"] = {{"lo", s.window().lo}, {"hi", s.window().hi}};
  if (auto b = s.support_min()) j["support_min"] = *b;
  if (auto d = s.diag_vanish()) j["diag_vanish"] = *d;
  auto coeffs = nlohmann::json::array();
  bool all_exact = true;
  const size_t total = s.window().size();
  for (size_t idx = 0; idx < total; ++idx) {
    const IntVec mu = s.window().mu_at(idx);
    const auto v = s.known(mu);
    if (!v) {
      all_exact = false;
      continue;
    }
    if (*v == 0) continue;
    coeffs.push_back({{"mu", mu}, {"value", v->get_str()}});
  }
  j["coefficients"] = std::move(coeffs);
  j["exact_on_window"] = all_exact;
  return j.dump(indent);
}

}  // namespace nfw
