#include "nfw/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace nfw {

namespace {

IntVec unit_vector(int n, int axis) {
  IntVec e(n, 0);
  e[axis] = 1;
  return e;
}

// Barycentric coordinates of v in the simplicial cone spanned by the given
// rays; nullopt when v is outside.
std::optional<QVec> cone_coordinates(const SimplicialFan& fan, const std::vector<int>& cone, const QVec& v) {
  const int n = fan.n;
  QMat a(n, QVec(n));
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) a[row][col] = Rational(fan.rays[cone[col]].dir[row]);
  }
  auto lambda = solve_linear(a, v);
  if (!lambda) return std::nullopt;
  for (const auto& l : *lambda) {
    if (l < 0) return std::nullopt;
  }
  return lambda;
}

std::optional<QVec> cone_coordinates(const SimplicialFan& fan, const std::vector<int>& cone, const IntVec& v) {
  QVec b;
  b.reserve(v.size());
  for (Int c : v) b.emplace_back(c);
  return cone_coordinates(fan, cone, b);
}

void canonicalize(SimplicialFan& fan) {
  std::vector<int> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(fan.rays[a].dir, fan.rays[b].dir); });
  std::vector<int> where(fan.rays.size());
  std::vector<Ray> rays;
  rays.reserve(fan.rays.size());
  for (size_t i = 0; i < order.size(); ++i) {
    where[order[i]] = static_cast<int>(i);
    rays.push_back(std::move(fan.rays[order[i]]));
  }
  fan.rays = std::move(rays);
  for (auto& cone : fan.maximal_cones) {
    for (int& r : cone) r = where[r];
    std::sort(cone.begin(), cone.end());
  }
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  fan.maximal_cones.erase(std::unique(fan.maximal_cones.begin(), fan.maximal_cones.end()),
                          fan.maximal_cones.end());
}

}  // namespace

bool SimplicialFan::operator==(const SimplicialFan& other) const {
  if (n != other.n || rays.size() != other.rays.size()) return false;
  for (size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].dir != other.rays[i].dir) return false;
  }
  return maximal_cones == other.maximal_cones;
}

int SimplicialFan::ray_index(const IntVec& dir) const {
  for (size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].dir == dir) return static_cast<int>(i);
  }
  return -1;
}

SimplicialFan build_fan(const std::vector<IntVec>& facet_normals, int n, InsertOrder order) {
  if (n <= 0) throw std::invalid_argument("build_fan: dimension must be positive");
  SimplicialFan fan;
  fan.n = n;
  for (int i = 0; i < n; ++i) fan.rays.push_back(Ray{unit_vector(n, i), {i}, {}});
  std::vector<int> orthant(n);
  std::iota(orthant.begin(), orthant.end(), 0);
  fan.maximal_cones.push_back(orthant);

  std::vector<int> schedule(facet_normals.size());
  std::iota(schedule.begin(), schedule.end(), 0);
  if (order == InsertOrder::ReverseFacetOrder) std::reverse(schedule.begin(), schedule.end());

  for (int j : schedule) {
    const IntVec v = primitive(facet_normals[j]);
    for (Int c : v) {
      if (c < 0) throw std::invalid_argument("build_fan: normal outside the orthant");
    }
    const int existing = fan.ray_index(v);
    if (existing >= 0) {
      fan.rays[existing].facet_ids.push_back(j);
      continue;
    }
    const int new_ray = static_cast<int>(fan.rays.size());
    std::vector<std::vector<int>> next_cones;
    bool hit = false;
    for (const auto& cone : fan.maximal_cones) {
      auto lambda = cone_coordinates(fan, cone, v);
      if (!lambda) {
        next_cones.push_back(cone);
        continue;
      }
      hit = true;
      for (size_t i = 0; i < cone.size(); ++i) {
        if ((*lambda)[i] == 0) continue;
        std::vector<int> replaced = cone;
        replaced[i] = new_ray;
        std::sort(replaced.begin(), replaced.end());
        next_cones.push_back(std::move(replaced));
      }
    }
    if (!hit) throw std::logic_error("build_fan: normal not covered by current fan");
    fan.rays.push_back(Ray{v, {}, {j}});
    std::sort(next_cones.begin(), next_cones.end());
    next_cones.erase(std::unique(next_cones.begin(), next_cones.end()), next_cones.end());
    fan.maximal_cones = std::move(next_cones);
  }
  canonicalize(fan);
  return fan;
}

bool fan_refines_dual(const SimplicialFan& fan, const NewtonPolyhedron& np) {
  for (const auto& cone : fan.maximal_cones) {
    std::vector<int> common;
    bool first = true;
    for (int r : cone) {
      // Indices of support points minimizing against this ray direction.
      std::vector<int> argmin;
      bool fresh = true;
      Int best = 0;
      for (size_t i = 0; i < np.support.size(); ++i) {
        const Int val = dot(fan.rays[r].dir, np.support[i].e);
        if (fresh || val < best) {
          best = val;
          argmin.clear();
          fresh = false;
        }
        if (val == best) argmin.push_back(static_cast<int>(i));
      }
      if (first) {
        common = argmin;
        first = false;
      } else {
        std::vector<int> merged;
        std::set_intersection(common.begin(), common.end(), argmin.begin(), argmin.end(),
                              std::back_inserter(merged));
        common = std::move(merged);
      }
      if (common.empty()) return false;
    }
  }
  return true;
}

bool fan_fills_orthant(const SimplicialFan& fan) {
  Rational total(0);
  for (const auto& cone : fan.maximal_cones) {
    QMat m(fan.n, QVec(fan.n));
    for (int col = 0; col < fan.n; ++col) {
      const IntVec& dir = fan.rays[cone[col]].dir;
      Int s = 0;
      for (Int c : dir) s = checked_add(s, c);
      if (s <= 0) return false;
      for (int row = 0; row < fan.n; ++row) m[row][col] = make_rational(dir[row], s);
    }
    Rational d = det_rational(std::move(m));
    if (d < 0) d = -d;
    total += d;
  }
  return total == 1;
}

std::string fan_to_json(const SimplicialFan& fan) {
  nlohmann::json j;
  j["n"] = fan.n;
  j["rays"] = nlohmann::json::array();
  for (const auto& ray : fan.rays) {
    nlohmann::json r;
    r["dir"] = ray.dir;
    r["axes"] = ray.axes;
    r["facets"] = ray.facet_ids;
    j["rays"].push_back(r);
  }
  j["maximal_cones"] = fan.maximal_cones;
  return j.dump(2) + "\n";
}

PLFunction make_pl(const SimplicialFan& fan, const std::vector<Rational>& ray_values) {
  if (ray_values.size() != fan.rays.size()) throw std::invalid_argument("make_pl: one value per ray required");
  PLFunction h;
  h.ray_values = ray_values;
  h.cone_forms.reserve(fan.maximal_cones.size());
  for (const auto& cone : fan.maximal_cones) {
    QMat a(fan.n, QVec(fan.n));
    QVec b;
    for (int i = 0; i < fan.n; ++i) {
      for (int jcol = 0; jcol < fan.n; ++jcol) a[i][jcol] = Rational(fan.rays[cone[i]].dir[jcol]);
      b.push_back(ray_values[cone[i]]);
    }
    auto form = solve_linear(a, b);
    if (!form) throw std::logic_error("make_pl: degenerate maximal cone");
    h.cone_forms.push_back(std::move(*form));
  }
  return h;
}

int locate_cone(const SimplicialFan& fan, const QVec& v) {
  if (static_cast<int>(v.size()) != fan.n) throw std::invalid_argument("locate_cone: arity mismatch");
  for (size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    if (cone_coordinates(fan, fan.maximal_cones[c], v)) return static_cast<int>(c);
  }
  return -1;
}

Rational pl_eval(const SimplicialFan& fan, const PLFunction& h, const QVec& v) {
  const int c = locate_cone(fan, v);
  if (c < 0) throw std::invalid_argument("pl_eval: point outside the fan support");
  Rational acc(0);
  for (int i = 0; i < fan.n; ++i) acc += h.cone_forms[static_cast<size_t>(c)][static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
  return acc;
}

PLFunction pl_from_offsets(const SimplicialFan& fan, const std::vector<Rational>& facet_values) {
  std::vector<Rational> values;
  values.reserve(fan.rays.size());
  for (const auto& ray : fan.rays) {
    // A facet label fixes the value even when the ray is also an axis (the
    // axis convention of value 0 only applies to unlabeled axis rays).
    Rational v(0);
    bool any = false;
    for (int f : ray.facet_ids) {
      const Rational& fv = facet_values.at(static_cast<size_t>(f));
      if (!any || fv > v) v = fv;
      any = true;
    }
    if (!any && ray.axes.empty()) throw std::logic_error("pl_from_offsets: unlabeled ray");
    values.push_back(v);
  }
  return make_pl(fan, values);
}

bool is_convex(const SimplicialFan& fan, const PLFunction& h) {
  const size_t k = fan.maximal_cones.size();
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto& ca = fan.maximal_cones[a];
      const auto& cb = fan.maximal_cones[b];
      std::vector<int> shared;
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(shared));
      if (static_cast<int>(shared.size()) != fan.n - 1) continue;
      for (int r : cb) {
        if (std::find(shared.begin(), shared.end(), r) != shared.end()) continue;
        // Extending cone a's form across the wall must not undercut h.
        Rational lhs(0);
        for (int col = 0; col < fan.n; ++col) {
          lhs += h.cone_forms[a][col] * Rational(fan.rays[r].dir[col]);
        }
        if (lhs < h.ray_values[r]) return false;
      }
    }
  }
  return true;
}

Int compute_M(const std::vector<IntVec>& normals, const IntVec& nu, bool minimal) {
  if (normals.empty() || normals.size() != nu.size()) {
    throw std::invalid_argument("compute_M: need one threshold per normal");
  }
  const size_t n = normals[0].size();
  for (const auto& p : normals) {
    if (p.size() != n) throw std::invalid_argument("compute_M: normal arity mismatch");
  }
  Int l = 1;
  Int max_nu = 1;
  for (Int v : nu) {
    if (v < 1) throw std::invalid_argument("compute_M: thresholds must be positive");
    l = checked_mul(l / std::gcd(l, v), v);
    max_nu = std::max(max_nu, v);
  }
  if (!minimal) return l;

  // Certificate box: any q with <p_j,q> <= lcm*max(nu) for its minimizing j
  // satisfies q_i <= lcm*max(nu) / min_j p_{j,i}.
  const Int reach = checked_mul(l, max_nu);
  IntVec hi(n);
  size_t box = 1;
  for (size_t i = 0; i < n; ++i) {
    Int min_p = 0;
    for (const auto& p : normals) {
      if (p[i] > 0 && (min_p == 0 || p[i] < min_p)) min_p = p[i];
    }
    if (min_p == 0) throw std::invalid_argument("compute_M: normals must have positive components");
    hi[i] = reach / min_p;
    const auto extent = static_cast<size_t>(hi[i] + 1);
    if (box > (static_cast<size_t>(1) << 22) / extent) {
      throw std::overflow_error("compute_M: certificate set too large");
    }
    box *= extent;
  }

  Int need = 1;
  IntVec q(n, 0);
  for (size_t step = 0; step < box; ++step) {
    Rational best;
    Int best_num = 0;
    bool first = true;
    for (size_t j = 0; j < normals.size(); ++j) {
      Int v = 0;
      for (size_t i = 0; i < n; ++i) v = checked_add(v, checked_mul(normals[j][i], q[i]));
      const Rational cand = Rational(v) / Rational(nu[j]);
      if (first || cand < best) {
        best = cand;
        best_num = v;
        first = false;
      }
    }
    if (best_num <= reach) {
      Rational red = best;
      red.canonicalize();
      const Int den = static_cast<Int>(red.get_den().get_si());
      need = checked_mul(need / std::gcd(need, den), den);
    }
    for (size_t i = n; i-- > 0;) {
      if (q[i] < hi[i]) {
        ++q[i];
        break;
      }
      q[i] = 0;
    }
  }
  return need;
}

Int compute_M(const NewtonPolyhedron& np, bool minimal) {
  return compute_M(np.normals(), np.offsets(), minimal);
}

}  // namespace nfw
