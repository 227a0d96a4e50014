#include "nfw/hypotheses.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nfw/linalg.hpp"

namespace nfw {

namespace {

std::string join_indices_one_based(const std::vector<int>& idx) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ' ';
    os << idx[i] + 1;
  }
  os << '}';
  return os.str();
}

bool all_zero(const std::vector<Polynomial>& gs) {
  for (const auto& g : gs) {
    if (!g.is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial> drop_zeros(const std::vector<Polynomial>& gs) {
  std::vector<Polynomial> out;
  for (const auto& g : gs) {
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

// Verdict for "the zero set of `system` in C^n has codimension >= bound at the
// origin", certified through the global affine dimension.
CheckItem affine_codim_item(std::string label, const std::vector<Polynomial>& system, int n, Int bound,
                            const GroebnerOptions& opts) {
  CheckItem item;
  item.label = std::move(label);
  item.required = bound;
  if (bound <= 0) {
    item.verdict = Verdict::Pass;
    item.note = "bound <= 0 holds vacuously";
    return item;
  }
  const std::vector<Polynomial> nonzero = drop_zeros(system);
  if (nonzero.empty()) {
    item.dim = n;
    item.verdict = Verdict::Fail;
    item.note = "every selected initial part vanishes identically; the zero set is the whole space (codimension 0)";
    return item;
  }
  try {
    const Int d = ideal_dim_affine(nonzero, n, opts);
    item.dim = d;
    if (d < 0) {
      item.verdict = Verdict::Pass;
      item.note = "empty zero set";
    } else if (n - d >= bound) {
      item.verdict = Verdict::Pass;
      item.note = "global codimension " + std::to_string(n - d) + " >= " + std::to_string(bound);
    } else {
      item.verdict = Verdict::Inconclusive;
      item.note = "global codimension " + std::to_string(n - d) + " < " + std::to_string(bound) +
                  "; the local dimension at the origin could still satisfy the bound";
    }
  } catch (const GroebnerLimitError& e) {
    item.verdict = Verdict::Inconclusive;
    item.note = e.what();
  }
  return item;
}

// Verdict for "the zero set of `system` in the torus (C*)^n has codimension
// >= bound"; definitive both ways.
CheckItem torus_codim_item(std::string label, const std::vector<Polynomial>& system, int n, Int bound,
                           const GroebnerOptions& opts) {
  CheckItem item;
  item.label = std::move(label);
  item.required = bound;
  if (bound <= 0) {
    item.verdict = Verdict::Pass;
    item.note = "bound <= 0 holds vacuously";
    return item;
  }
  const std::vector<Polynomial> nonzero = drop_zeros(system);
  if (nonzero.empty()) {
    item.dim = n;
    item.verdict = Verdict::Fail;
    item.note = "every cone initial part vanishes identically; the zero set is the whole torus (codimension 0)";
    return item;
  }
  try {
    const Int d = ideal_dim_torus(nonzero, n, opts);
    item.dim = d;
    if (d < 0) {
      item.verdict = Verdict::Pass;
      item.note = "empty torus zero set";
    } else if (n - d >= bound) {
      item.verdict = Verdict::Pass;
      item.note = "torus codimension " + std::to_string(n - d) + " >= " + std::to_string(bound);
    } else {
      item.verdict = Verdict::Fail;
      item.note = "torus codimension " + std::to_string(n - d) + " < " + std::to_string(bound);
    }
  } catch (const GroebnerLimitError& e) {
    item.verdict = Verdict::Inconclusive;
    item.note = e.what();
  }
  return item;
}

// Nonempty facet-index subsets ordered by (size, lexicographic).
std::vector<std::vector<int>> facet_subsets(int r) {
  if (r < 0 || r > 20) throw std::invalid_argument("facet_subsets: facet count out of range");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> subset;
    for (int j = 0; j < r; ++j) {
      if (mask & (1u << j)) subset.push_back(j);
    }
    out.push_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

void check_germ_inputs(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np, const char* who) {
  if (gs.empty()) throw std::invalid_argument(std::string(who) + ": no generators");
  for (const auto& g : gs) {
    if (g.nvars() != np.n) throw std::invalid_argument(std::string(who) + ": generator arity differs from the polyhedron");
  }
}

// Shared driver for the facet-subset quantified germ checks.
HypothesisReport facet_family_report(std::string check, const std::vector<Polynomial>& gs,
                                     const NewtonPolyhedron& np, const GroebnerOptions& opts,
                                     const std::function<Int(Int k, Int s)>& bound_of, size_t min_s) {
  check_germ_inputs(gs, np, check.c_str());
  HypothesisReport report;
  report.check = std::move(check);
  const Int k = static_cast<Int>(gs.size());
  if (all_zero(gs)) {
    CheckItem item;
    item.label = "system";
    item.verdict = Verdict::Fail;
    item.dim = np.n;
    item.note = "all generators are zero";
    report.items.push_back(std::move(item));
    return report;
  }
  const std::vector<IntVec> normals = np.normals();
  for (const auto& subset : facet_subsets(static_cast<int>(normals.size()))) {
    if (subset.size() < min_s) continue;
    std::vector<Polynomial> system;
    system.reserve(gs.size());
    for (const auto& g : gs) system.push_back(initial_part(g, normals, subset));
    const Int bound = bound_of(k, static_cast<Int>(subset.size()));
    report.items.push_back(affine_codim_item("facets " + join_indices_one_based(subset), system, np.n, bound, opts));
  }
  return report;
}

struct ConeFace {
  std::vector<int> rays;       // indices into fan.rays
  std::vector<int> axis_vars;  // coordinates forced to zero
  std::vector<int> facet_ids;  // facet labels carried by the rays
  bool unlabeled = false;      // contains a ray with no label at all
  std::string label;
};

std::vector<ConeFace> fan_faces_with_facet_ray(const SimplicialFan& fan) {
  std::set<std::vector<int>> seen;
  for (const auto& cone : fan.maximal_cones) {
    const int m = static_cast<int>(cone.size());
    if (m > 20) throw std::invalid_argument("fan_faces: cone too large");
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) face.push_back(cone[i]);
      }
      seen.insert(std::move(face));
    }
  }
  std::vector<ConeFace> out;
  for (const auto& rays : seen) {
    ConeFace face;
    face.rays = rays;
    std::ostringstream label;
    label << "cone {";
    bool any_facet = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (i) label << ' ';
      const Ray& ray = fan.rays[rays[i]];
      if (ray.axes.empty() && ray.facet_ids.empty()) {
        face.unlabeled = true;
        label << '?';
        continue;
      }
      std::string tag;
      for (const int a : ray.axes) {
        face.axis_vars.push_back(a);
        tag += "e" + std::to_string(a + 1);
      }
      for (const int f : ray.facet_ids) {
        face.facet_ids.push_back(f);
        tag += "p" + std::to_string(f + 1);
        any_facet = true;
      }
      label << tag;
    }
    label << '}';
    face.label = label.str();
    if (!any_facet) continue;
    out.push_back(std::move(face));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConeFace& a, const ConeFace& b) {
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    return a.rays < b.rays;
  });
  return out;
}

void check_cone_inputs(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np, const SimplicialFan& fan,
                       const char* who) {
  check_germ_inputs(gs, np, who);
  if (fan.n != np.n) throw std::invalid_argument(std::string(who) + ": fan dimension differs from the polyhedron");
  for (const auto& ray : fan.rays) {
    for (const int f : ray.facet_ids) {
      if (f < 0 || f >= static_cast<int>(np.facet_count())) {
        throw std::invalid_argument(std::string(who) + ": fan facet label out of range for the polyhedron");
      }
    }
  }
}

// Cone initial parts of every generator on one face.
std::vector<Polynomial> cone_initial_system(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                            const std::vector<IntVec>& nu, const ConeFace& face) {
  std::vector<IntVec> cone_normals;
  cone_normals.reserve(face.facet_ids.size());
  const std::vector<IntVec> normals = np.normals();
  for (const int f : face.facet_ids) cone_normals.push_back(normals[f]);
  std::vector<Polynomial> system;
  system.reserve(gs.size());
  for (size_t i = 0; i < gs.size(); ++i) {
    std::vector<Int> thresholds;
    thresholds.reserve(face.facet_ids.size());
    for (const int f : face.facet_ids) thresholds.push_back(nu[i][f]);
    system.push_back(initial_part_cone(gs[i], face.axis_vars, cone_normals, thresholds));
  }
  return system;
}

HypothesisReport cone_family_report(std::string check, const std::vector<Polynomial>& gs,
                                    const NewtonPolyhedron& np, const SimplicialFan& fan,
                                    const GroebnerOptions& opts, Int bound_shift) {
  check_cone_inputs(gs, np, fan, check.c_str());
  HypothesisReport report;
  report.check = std::move(check);
  const Int k = static_cast<Int>(gs.size());
  const std::vector<IntVec> nu = nu_matrix(gs, np.normals());
  for (const auto& face : fan_faces_with_facet_ray(fan)) {
    if (face.unlabeled) {
      CheckItem item;
      item.label = face.label;
      item.verdict = Verdict::Inconclusive;
      item.note = "face contains an unlabeled subdivision ray; cone initial parts are undefined";
      report.items.push_back(std::move(item));
      continue;
    }
    const Int l = static_cast<Int>(face.axis_vars.size());
    const Int s = static_cast<Int>(face.facet_ids.size());
    const Int bound = k - l - s + bound_shift;
    report.items.push_back(
        torus_codim_item(face.label, cone_initial_system(gs, np, nu, face), np.n, bound, opts));
  }
  return report;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, int nvars) {
  const size_t k = m.size();
  if (k == 0) return Polynomial::monomial(Exponent(static_cast<size_t>(nvars)), Rational(1));
  if (k == 1) return m[0][0];
  Polynomial det(nvars);
  for (size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(k - 1);
    for (size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      row.reserve(k - 1);
      for (size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Polynomial cofactor = m[0][j] * poly_det(minor, nvars);
    det = (j % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

// Nonzero k x k minors of the Jacobian of the system (rows = generators,
// columns = a size-k variable subset).
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& system, int nvars) {
  const int k = static_cast<int>(system.size());
  std::vector<Polynomial> minors;
  if (k > nvars) return minors;
  std::vector<std::vector<Polynomial>> jac(k);
  for (int i = 0; i < k; ++i) {
    jac[i].reserve(nvars);
    for (int v = 0; v < nvars; ++v) jac[i].push_back(derivative(system[i], v));
  }
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>());
    for (int i = 0; i < k; ++i) {
      sub[i].reserve(k);
      for (int c : cols) sub[i].push_back(jac[i][c]);
    }
    Polynomial det = poly_det(sub, nvars);
    if (!det.is_zero()) minors.push_back(std::move(det));
    int pos = k - 1;
    while (pos >= 0 && cols[pos] == nvars - k + pos) --pos;
    if (pos < 0) break;
    ++cols[pos];
    for (int i = pos + 1; i < k; ++i) cols[i] = cols[i - 1] + 1;
  }
  return minors;
}

Polytope support_polytope(const Polynomial& g) { return make_polytope(g.support()); }

void check_support_inputs(const std::vector<Polynomial>& gs, const char* who) {
  if (gs.empty()) throw std::invalid_argument(std::string(who) + ": no generators");
  for (const auto& g : gs) {
    if (g.nvars() != gs.front().nvars()) throw std::invalid_argument(std::string(who) + ": mixed arities");
    if (g.is_zero()) throw std::invalid_argument(std::string(who) + ": zero generator has no support polytope");
  }
}

std::string dim_note(int d) { return "dimension " + std::to_string(d); }

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict combine_verdicts(const std::vector<Verdict>& vs) {
  Verdict out = Verdict::Pass;
  for (const Verdict v : vs) {
    if (v == Verdict::Fail) return Verdict::Fail;
    if (v == Verdict::Inconclusive) out = Verdict::Inconclusive;
  }
  return out;
}

Verdict HypothesisReport::verdict() const {
  std::vector<Verdict> vs;
  vs.reserve(items.size());
  for (const auto& item : items) vs.push_back(item.verdict);
  return combine_verdicts(vs);
}

std::string report_to_json(const HypothesisReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["verdict"] = std::string(verdict_name(r.verdict()));
  j["items"] = nlohmann::json::array();
  for (const auto& item : r.items) {
    nlohmann::json ji;
    ji["label"] = item.label;
    ji["verdict"] = std::string(verdict_name(item.verdict));
    if (item.dim) ji["dim"] = *item.dim;
    if (item.required) ji["required_codim"] = *item.required;
    if (!item.note.empty()) ji["note"] = item.note;
    j["items"].push_back(std::move(ji));
  }
  return j.dump(2) + "\n";
}

HypothesisReport check_series_factorization(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                            const GroebnerOptions& opts) {
  return facet_family_report("series-factorization", gs, np, opts,
                             [](Int k, Int s) { return k - s + 1; }, 1);
}

HypothesisReport check_graded_factorization(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                            const GroebnerOptions& opts) {
  return facet_family_report("graded-factorization", gs, np, opts,
                             [](Int k, Int s) { return k - s; }, 1);
}

HypothesisReport check_filtration_intersection(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                               const GroebnerOptions& opts) {
  return facet_family_report("filtration-intersection", gs, np, opts,
                             [](Int k, Int s) { return k - s + 2; }, 2);
}

HypothesisReport check_cone_exactness(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                      const SimplicialFan& fan, const GroebnerOptions& opts) {
  return cone_family_report("cone-exactness", gs, np, fan, opts, 0);
}

HypothesisReport check_cone_sections(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                     const SimplicialFan& fan, const GroebnerOptions& opts) {
  return cone_family_report("cone-sections", gs, np, fan, opts, 1);
}

HypothesisReport check_cone_sections_collapsed(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                               const std::vector<Int>& rho, Int big_m, const SimplicialFan& fan,
                                               const GroebnerOptions& opts) {
  check_cone_inputs(gs, np, fan, "collapsed-cone-sections");
  if (rho.size() != gs.size())
    throw std::invalid_argument("collapsed-cone-sections: one rho per generator required");
  for (Int r : rho) {
    if (r < 1) throw std::invalid_argument("collapsed-cone-sections: rho must be positive");
  }
  if (big_m < 1) throw std::invalid_argument("collapsed-cone-sections: M must be positive");
  HypothesisReport report;
  report.check = "collapsed-cone-sections";
  report.note =
      "initial parts taken with facet equalities at the weighted thresholds rho_i*offset_j/M; "
      "a threshold missed by every exponent makes that initial part zero";
  const Int k = static_cast<Int>(gs.size());
  const std::vector<IntVec> normals = np.normals();
  const std::vector<Int> offsets = np.offsets();
  for (const auto& face : fan_faces_with_facet_ray(fan)) {
    if (face.unlabeled) {
      CheckItem item;
      item.label = face.label;
      item.verdict = Verdict::Inconclusive;
      item.note = "face contains an unlabeled subdivision ray; cone initial parts are undefined";
      report.items.push_back(std::move(item));
      continue;
    }
    std::vector<IntVec> cone_normals;
    cone_normals.reserve(face.facet_ids.size());
    for (const int f : face.facet_ids) cone_normals.push_back(normals[f]);
    std::vector<Polynomial> system;
    system.reserve(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
      std::vector<Rational> thresholds;
      thresholds.reserve(face.facet_ids.size());
      for (const int f : face.facet_ids) thresholds.emplace_back(Rational(rho[i] * offsets[f], big_m));
      system.push_back(initial_part_cone(gs[i], face.axis_vars, cone_normals, thresholds));
    }
    const Int l = static_cast<Int>(face.axis_vars.size());
    const Int s = static_cast<Int>(face.facet_ids.size());
    const Int bound = k - l - s + 1;
    report.items.push_back(torus_codim_item(face.label, system, np.n, bound, opts));
  }
  return report;
}

HypothesisReport check_nondegeneracy(const std::vector<Polynomial>& gs, const NewtonPolyhedron& np,
                                     const SimplicialFan& fan, const GroebnerOptions& opts) {
  check_cone_inputs(gs, np, fan, "nondegeneracy");
  HypothesisReport report;
  report.check = "nondegeneracy";
  const int n = np.n;
  const Int k = static_cast<Int>(gs.size());
  const std::vector<IntVec> nu = nu_matrix(gs, np.normals());
  for (const auto& face : fan_faces_with_facet_ray(fan)) {
    CheckItem item;
    item.label = face.label;
    item.required = k;
    if (face.unlabeled) {
      item.verdict = Verdict::Inconclusive;
      item.note = "face contains an unlabeled subdivision ray; cone initial parts are undefined";
      report.items.push_back(std::move(item));
      continue;
    }
    const std::vector<Polynomial> system = cone_initial_system(gs, np, nu, face);
    const std::vector<Polynomial> nonzero = drop_zeros(system);
    try {
      const Int dsys = nonzero.empty() ? Int(n) : ideal_dim_torus(nonzero, n, opts);
      item.dim = dsys;
      if (dsys < 0) {
        item.verdict = Verdict::Pass;
        item.note = "empty torus zero set (vacuously smooth of any codimension)";
      } else if (dsys != Int(n) - k) {
        item.verdict = Verdict::Fail;
        item.note = "torus dimension " + std::to_string(dsys) + " differs from n-k = " + std::to_string(n - k);
      } else {
        std::vector<Polynomial> combined = nonzero;
        for (auto& m : jacobian_minors(system, n)) combined.push_back(std::move(m));
        const Int dsing = ideal_dim_torus(combined, n, opts);
        if (dsing < 0) {
          item.verdict = Verdict::Pass;
          item.note = "smooth of torus codimension " + std::to_string(k);
        } else {
          item.verdict = Verdict::Fail;
          item.note = "singular locus of torus dimension " + std::to_string(dsing);
        }
      }
    } catch (const GroebnerLimitError& e) {
      item.verdict = Verdict::Inconclusive;
      item.note = e.what();
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

HypothesisReport check_fullness(const std::vector<Polynomial>& gs) {
  check_support_inputs(gs, "fullness");
  HypothesisReport report;
  report.check = "fullness";
  for (size_t i = 0; i < gs.size(); ++i) {
    const Polytope p = support_polytope(gs[i]);
    CheckItem item;
    item.label = "polytope " + std::to_string(i + 1);
    const int d = affine_dim(p.points);
    item.dim = d;
    item.required = p.n;
    item.verdict = d == p.n ? Verdict::Pass : Verdict::Fail;
    item.note = dim_note(d) + " of ambient " + std::to_string(p.n);
    report.items.push_back(std::move(item));
  }
  return report;
}

HypothesisReport check_partial_sum_dims(const std::vector<Polynomial>& gs) {
  check_support_inputs(gs, "partial-sum-dims");
  HypothesisReport report;
  report.check = "partial-sum-dims";
  std::vector<Polytope> ps;
  ps.reserve(gs.size());
  for (const auto& g : gs) ps.push_back(support_polytope(g));
  Polytope partial = ps.front();
  for (size_t j = 1; j < ps.size(); ++j) {
    partial = minkowski_sum(partial, ps[j]);
    const int dsum = affine_dim(partial.points);
    const int dj = affine_dim(ps[j].points);
    CheckItem item;
    item.label = "sum {1..=" + std::to_string(j + 1) + "} vs polytope " + std::to_string(j + 1);
    item.dim = dsum;
    item.verdict = dsum == dj ? Verdict::Pass : Verdict::Fail;
    item.note = "sum " + dim_note(dsum) + ", summand " + dim_note(dj);
    report.items.push_back(std::move(item));
  }
  for (size_t j = 0; j < ps.size(); ++j) {
    const int dj = affine_dim(ps[j].points);
    CheckItem item;
    item.label = "polytope " + std::to_string(j + 1) + " dimension exceeds its index";
    item.dim = dj;
    item.required = static_cast<Int>(j) + 2;  // dim > j+1, i.e. dim >= j+2 (1-based index)
    item.verdict = dj > static_cast<int>(j) + 1 ? Verdict::Pass : Verdict::Fail;
    item.note = dim_note(dj) + " vs index " + std::to_string(j + 1);
    report.items.push_back(std::move(item));
  }
  return report;
}

HypothesisReport check_edge_sets(const std::vector<Polynomial>& gs) {
  check_support_inputs(gs, "edge-sets");
  HypothesisReport report;
  report.check = "edge-sets";
  std::vector<Polytope> ps;
  ps.reserve(gs.size());
  for (const auto& g : gs) ps.push_back(support_polytope(g));
  std::vector<std::vector<IntVec>> normal_sets(ps.size());
  bool base_ok = true;
  for (size_t i = 0; i < ps.size(); ++i) {
    CheckItem item;
    item.label = "polytope " + std::to_string(i + 1) + " facet normals";
    if (!is_full(ps[i])) {
      item.verdict = Verdict::Inconclusive;
      item.note = "not full-dimensional; the facet-normal set is not defined here";
      if (i == 0) base_ok = false;
      report.items.push_back(std::move(item));
      continue;
    }
    for (const auto& f : polytope_facets(ps[i])) normal_sets[i].push_back(f.normal);
    std::sort(normal_sets[i].begin(), normal_sets[i].end());
    item.verdict = Verdict::Pass;
    item.note = std::to_string(normal_sets[i].size()) + " facet normals";
    report.items.push_back(std::move(item));
  }
  for (size_t i = 1; i < ps.size(); ++i) {
    CheckItem item;
    item.label = "polytope " + std::to_string(i + 1) + " vs polytope 1";
    if (!base_ok || normal_sets[i].empty()) {
      item.verdict = Verdict::Inconclusive;
      item.note = "normal sets unavailable";
    } else if (normal_sets[i] == normal_sets[0]) {
      item.verdict = Verdict::Pass;
      item.note = "facet-normal sets coincide";
    } else {
      item.verdict = Verdict::Fail;
      item.note = "facet-normal sets differ";
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

HypothesisReport check_pair_facet_dims(const std::vector<Polynomial>& gs) {
  check_support_inputs(gs, "pair-facet-dims");
  HypothesisReport report;
  report.check = "pair-facet-dims";
  if (gs.size() != 2) {
    CheckItem item;
    item.label = "system";
    item.verdict = Verdict::Inconclusive;
    item.note = "requires exactly two generators";
    report.items.push_back(std::move(item));
    return report;
  }
  const Polytope p1 = support_polytope(gs[0]);
  const Polytope p2 = support_polytope(gs[1]);
  const int n = p1.n;
  if (n < 4) {
    CheckItem item;
    item.label = "ambient dimension";
    item.dim = n;
    item.required = 4;
    item.verdict = Verdict::Fail;
    item.note = "requires n >= 4";
    report.items.push_back(std::move(item));
    return report;
  }
  const int d1 = affine_dim(p1.points);
  const int d2 = affine_dim(p2.points);
  std::vector<IntVec> normals;
  try {
    normals = minkowski_facet_normals(p1, p2);
  } catch (const std::invalid_argument& e) {
    CheckItem item;
    item.label = "sum polytope";
    item.verdict = Verdict::Inconclusive;
    item.note = e.what();
    report.items.push_back(std::move(item));
    return report;
  }
  for (const auto& p : normals) {
    const std::vector<int> f1 = min_face(p1, p);
    const std::vector<int> f2 = min_face(p2, p);
    std::vector<Exponent> pts1, pts2;
    for (const int idx : f1) pts1.push_back(p1.points[idx]);
    for (const int idx : f2) pts2.push_back(p2.points[idx]);
    const int e1 = affine_dim(pts1);
    const int e2 = affine_dim(pts2);
    const bool facet_of_1 = e1 == d1 - 1;
    const bool facet_of_2 = e2 == d2 - 1;
    if (!facet_of_1 && !facet_of_2) continue;
    std::ostringstream label;
    label << "normal (";
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) label << ' ';
      label << p[i];
    }
    label << ')';
    CheckItem item;
    item.label = label.str();
    item.required = 2;
    const bool ok = (!facet_of_2 || e1 >= 2) && (!facet_of_1 || e2 >= 2);
    item.verdict = ok ? Verdict::Pass : Verdict::Fail;
    item.note = "face dims " + std::to_string(e1) + " and " + std::to_string(e2);
    report.items.push_back(std::move(item));
  }
  if (report.items.empty()) {
    CheckItem item;
    item.label = "system";
    item.verdict = Verdict::Pass;
    item.note = "no facet of the sum touches a summand facet; condition is vacuous";
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace nfw
