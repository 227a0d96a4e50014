#include "nfw/toric.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nfw {
namespace {

constexpr int kMaxCones = 20;       // chi enumerates 2^#cones subsets
constexpr int kMaxWidenings = 24;   // box growth attempts before giving up

void check_mask_width(int bits, const char* what) {
  if (bits < 0 || bits > 32) throw std::invalid_argument(std::string("cone_index_data: too many ") + what);
}

// chi weight of one exponent: chi at mu minus chi at mu + 1.
Int weight_of(const FiltrationSpec& spec, const ConeIndexData& data, const IntVec& mu,
              const IntVec& mu1, const IntVec& q) {
  return chi_i(data, i_mu_q(spec, mu, q)) - chi_i(data, i_mu_q(spec, mu1, q));
}

IntVec plus_one(const IntVec& mu) {
  IntVec out = mu;
  for (Int& c : out) c = checked_add(c, 1);
  return out;
}

// Walks all integer points of [lo, hi]; fn may stop the walk by returning false.
template <typename Fn>
bool walk_box(const IntVec& lo, const IntVec& hi, Fn&& fn) {
  const size_t n = lo.size();
  IntVec q = lo;
  while (true) {
    if (!fn(q)) return false;
    size_t i = 0;
    while (i < n && q[i] == hi[i]) {
      q[i] = lo[i];
      ++i;
    }
    if (i == n) return true;
    ++q[i];
  }
}

bool on_shell(const IntVec& q, const IntVec& lo, const IntVec& hi) {
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == lo[i] || q[i] == hi[i]) return true;
  }
  return false;
}

}  // namespace

ConeIndexData cone_index_data(const SimplicialFan& fan, int r) {
  check_mask_width(fan.n, "variables");
  check_mask_width(r, "weight rows");
  if (fan.maximal_cones.size() > kMaxCones) {
    throw std::invalid_argument("cone_index_data: fan has too many maximal cones");
  }
  ConeIndexData data{fan.n, r, {}};
  data.cones.reserve(fan.maximal_cones.size());
  for (const auto& cone : fan.maximal_cones) {
    IndexPair pair;
    for (int ray_idx : cone) {
      const Ray& ray = fan.rays.at(static_cast<size_t>(ray_idx));
      for (int axis : ray.axes) pair.vars |= std::uint32_t{1} << axis;
      for (int fid : ray.facet_ids) {
        if (fid < 0 || fid >= r) throw std::invalid_argument("cone_index_data: facet label out of range");
        pair.rows |= std::uint32_t{1} << fid;
      }
    }
    data.cones.push_back(pair);
  }
  return data;
}

IndexPair i_mu_q(const FiltrationSpec& spec, const IntVec& mu, const IntVec& q) {
  if (static_cast<int>(q.size()) != spec.n) throw std::invalid_argument("i_mu_q: point arity mismatch");
  if (mu.size() != spec.normals.size()) throw std::invalid_argument("i_mu_q: threshold arity mismatch");
  IndexPair pair;
  for (int i = 0; i < spec.n; ++i) {
    if (q[i] >= 0) pair.vars |= std::uint32_t{1} << i;
  }
  const IntVec v = value_of(spec, q);
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] >= mu[j]) pair.rows |= std::uint32_t{1} << j;
  }
  return pair;
}

Int chi_i(const ConeIndexData& data, const IndexPair& I) {
  const size_t l = data.cones.size();
  if (l > kMaxCones) throw std::invalid_argument("chi_i: too many maximal cones");
  Int chi = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << l); ++mask) {
    IndexPair inter{0xffffffffu, 0xffffffffu};
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      inter = pair_intersect(inter, data.cones[static_cast<size_t>(std::countr_zero(rest))]);
    }
    if (pair_subset(inter, I)) {
      chi += (std::popcount(mask) % 2 == 1) ? 1 : -1;
    }
  }
  return chi;
}

PairCounts n_ij_mu(const FiltrationSpec& spec, const ConeIndexData& data, const IntVec& mu) {
  if (data.n != spec.n || data.r != spec.r()) {
    throw std::invalid_argument("n_ij_mu: cone data does not match the weight data");
  }
  const IntVec mu1 = plus_one(mu);

  // Initial box: wide enough that every row threshold flips inside it for
  // points moving along any single axis.
  Int reach = 2;
  for (size_t j = 0; j < mu.size(); ++j) {
    reach = std::max(reach, checked_add(std::abs(mu[j]), 2));
  }
  IntVec lo(spec.n, -reach), hi(spec.n, reach);

  for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
    // Certificate: weight vanishes on the entire shell one layer outside.
    IntVec shell_lo = lo, shell_hi = hi;
    for (int i = 0; i < spec.n; ++i) {
      shell_lo[i] = checked_sub(shell_lo[i], 1);
      shell_hi[i] = checked_add(shell_hi[i], 1);
    }
    const bool certified = walk_box(shell_lo, shell_hi, [&](const IntVec& q) {
      if (!on_shell(q, shell_lo, shell_hi)) return true;
      return weight_of(spec, data, mu, mu1, q) == 0;
    });
    if (certified) {
      PairCounts out;
      out.box_lo = lo;
      out.box_hi = hi;
      walk_box(lo, hi, [&](const IntVec& q) {
        ++out.counts[{i_mu_q(spec, mu, q), i_mu_q(spec, mu1, q)}];
        return true;
      });
      return out;
    }
    lo = shell_lo;
    hi = shell_hi;
  }
  throw std::runtime_error(
      "n_ij_mu: no boundary-vanishing certificate after widening; "
      "nonzero chi weights keep appearing on the box shell");
}

Int l_toric_coefficient(const FiltrationSpec& spec, const ConeIndexData& data, const IntVec& mu) {
  const PairCounts pc = n_ij_mu(spec, data, mu);
  std::map<IndexPair, Int> chi_cache;
  const auto chi_of = [&](const IndexPair& I) {
    auto it = chi_cache.find(I);
    if (it == chi_cache.end()) it = chi_cache.emplace(I, chi_i(data, I)).first;
    return it->second;
  };
  Int acc = 0;
  for (const auto& [key, count] : pc.counts) {
    acc = checked_add(acc, checked_mul(count, chi_of(key.first) - chi_of(key.second)));
  }
  return acc;
}

TruncatedSeries l_toric(const FiltrationSpec& spec, const SimplicialFan& fan, const Window& w) {
  if (w.r() != spec.r()) throw std::invalid_argument("l_toric: window arity mismatch");
  if (fan.n != spec.n) throw std::invalid_argument("l_toric: fan dimension mismatch");
  const ConeIndexData data = cone_index_data(fan, spec.r());
  TruncatedSeries s = TruncatedSeries::unknown(w);
  for (size_t idx = 0; idx < w.size(); ++idx) {
    const IntVec mu = w.mu_at(idx);
    s.set(mu, BigInt(l_toric_coefficient(spec, data, mu)));
  }
  return s;
}

std::string pair_counts_csv(const FiltrationSpec& spec, const ConeIndexData& data,
                            const IntVec& mu) {
  const PairCounts pc = n_ij_mu(spec, data, mu);
  const auto mask_list = [](std::uint32_t mask) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int b = 0; b < 32; ++b) {
      if (mask & (std::uint32_t{1} << b)) {
        if (!first) os << ' ';
        os << (b + 1);
        first = false;
      }
    }
    os << '}';
    return os.str();
  };
  const auto pair_text = [&](const IndexPair& p) {
    return mask_list(p.vars) + "x" + mask_list(p.rows);
  };
  std::ostringstream os;
  os << "mu,I,J,count,chi_I,chi_J\n";
  for (const auto& [key, count] : pc.counts) {
    os << '(';
    for (size_t j = 0; j < mu.size(); ++j) {
      if (j) os << ' ';
      os << mu[j];
    }
    os << ")," << pair_text(key.first) << ',' << pair_text(key.second) << ',' << count << ','
       << chi_i(data, key.first) << ',' << chi_i(data, key.second) << '\n';
  }
  return os.str();
}

}  // namespace nfw
