#include "nfw/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nfw/linalg.hpp"

namespace nfw {

namespace {

// Fraction-free determinant on a k x k scratch buffer; entries stay integral.
// Throws on 64-bit overflow, which callers translate into the exact fallback.
Int det_bareiss_ll(std::vector<std::vector<Int>>& a, int k) {
  if (k == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        const Int num = checked_sub(checked_mul(a[row][j], a[col][col]), checked_mul(a[row][col], a[col][j]));
        a[row][j] = num / prev;
      }
      a[row][col] = 0;
    }
    prev = a[col][col];
  }
  return checked_mul(sign, a[k - 1][k - 1]);
}

BigInt det_exact(std::vector<std::vector<BigInt>> a, int k) {
  if (k == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
      }
      a[row][col] = 0;
    }
    prev = a[col][col];
  }
  return sign * a[k - 1][k - 1];
}

Int to_int_checked(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<Int>(v.get_si());
}

// Normal of the hyperplane through n affinely independent points, via the
// generalized cross product of their differences; empty when dependent.
class HyperplaneSolver {
 public:
  explicit HyperplaneSolver(int n) : n_(n), diff_(std::max(0, n - 1), IntVec(n, 0)), minor_(std::max(0, n - 1), std::vector<Int>(std::max(0, n - 1), 0)) {}

  IntVec normal_through(const std::vector<Exponent>& pts, const std::vector<int>& subset) {
    for (int i = 1; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        diff_[i - 1][j] = checked_sub(pts[subset[i]].e[j], pts[subset[0]].e[j]);
      }
    }
    IntVec normal(n_, 0);
    bool nonzero = false;
    for (int drop = 0; drop < n_; ++drop) {
      Int det = 0;
      try {
        for (int r = 0; r < n_ - 1; ++r) {
          int cc = 0;
          for (int c = 0; c < n_; ++c) {
            if (c == drop) continue;
            minor_[r][cc++] = diff_[r][c];
          }
        }
        det = det_bareiss_ll(minor_, n_ - 1);
      } catch (const std::overflow_error&) {
        std::vector<std::vector<BigInt>> big(n_ - 1, std::vector<BigInt>(n_ - 1));
        for (int r = 0; r < n_ - 1; ++r) {
          int cc = 0;
          for (int c = 0; c < n_; ++c) {
            if (c == drop) continue;
            big[r][cc++] = diff_[r][c];
          }
        }
        det = to_int_checked(det_exact(std::move(big), n_ - 1));
      }
      normal[drop] = (drop % 2 == 0) ? det : checked_mul(det, -1);
      nonzero = nonzero || det != 0;
    }
    if (!nonzero) return {};
    return primitive(normal);
  }

 private:
  int n_;
  std::vector<IntVec> diff_;
  std::vector<std::vector<Int>> minor_;
};

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > m || k <= 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Exponent> dedup_sorted(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end(), [](const Exponent& a, const Exponent& b) { return lex_less(a.e, b.e); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::vector<IntVec> NewtonPolyhedron::normals() const {
  std::vector<IntVec> out;
  out.reserve(facets.size());
  for (const auto& f : facets) out.push_back(f.normal);
  return out;
}

IntVec NewtonPolyhedron::offsets() const {
  IntVec out;
  out.reserve(facets.size());
  for (const auto& f : facets) out.push_back(f.offset);
  return out;
}

std::vector<IntVec> NewtonPolyhedron::normal_columns() const {
  std::vector<IntVec> cols(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    cols[l].reserve(facets.size());
    for (const auto& f : facets) cols[l].push_back(f.normal[l]);
  }
  return cols;
}

NewtonPolyhedron newton_polyhedron(std::vector<Exponent> points) {
  if (points.empty()) throw std::invalid_argument("newton_polyhedron: empty support");
  const int n = static_cast<int>(points.front().e.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.e.size()) != n) throw std::invalid_argument("newton_polyhedron: mixed arities");
    for (Int c : p.e) {
      if (c < 0) throw std::invalid_argument("newton_polyhedron: negative exponent");
    }
  }
  NewtonPolyhedron np;
  np.n = n;
  np.support = dedup_sorted(std::move(points));
  const int m = static_cast<int>(np.support.size());

  std::map<IntVec, Facet> found;
  if (n == 1) {
    Int best = np.support.front().e[0];
    for (const auto& q : np.support) best = std::min(best, q.e[0]);
    Facet f;
    f.normal = {1};
    f.offset = best;
    for (int i = 0; i < m; ++i) {
      if (np.support[i].e[0] == best) f.points.push_back(i);
    }
    found.emplace(f.normal, f);
  } else {
    HyperplaneSolver solver(n);
    for_each_subset(m, n, [&](const std::vector<int>& subset) {
      IntVec p = solver.normal_through(np.support, subset);
      if (p.empty()) return;
      bool all_pos = true, all_neg = true;
      for (Int c : p) {
        all_pos = all_pos && c > 0;
        all_neg = all_neg && c < 0;
      }
      if (all_neg) {
        for (Int& c : p) c = -c;
      } else if (!all_pos) {
        return;
      }
      if (found.count(p)) return;
      const Int offset = dot(p, np.support[subset[0]].e);
      Facet f;
      f.normal = p;
      f.offset = offset;
      for (int i = 0; i < m; ++i) {
        const Int v = dot(p, np.support[i].e);
        if (v < offset) return;  // hyperplane does not support the polyhedron
        if (v == offset) f.points.push_back(i);
      }
      found.emplace(f.normal, std::move(f));
    });
  }
  for (auto& [normal, facet] : found) np.facets.push_back(std::move(facet));

  for (int i = 0; i < m; ++i) {
    // q is a vertex unless it lies in conv(other points) + R_{>=0}^n.
    QMat a(static_cast<size_t>(n) + 1);
    QVec b;
    for (int row = 0; row < n; ++row) {
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        a[row].push_back(Rational(np.support[j].e[row]));
      }
      for (int d = 0; d < n; ++d) a[row].push_back(Rational(d == row ? 1 : 0));
      b.push_back(Rational(np.support[i].e[row]));
    }
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      a[n].push_back(Rational(1));
    }
    for (int d = 0; d < n; ++d) a[n].push_back(Rational(0));
    b.push_back(Rational(1));
    if (m == 1 || !lp_feasible(a, b)) np.vertices.push_back(i);
  }
  return np;
}

std::vector<Exponent> sum_supports(const std::vector<Polynomial>& gs) {
  if (gs.empty()) throw std::invalid_argument("sum_supports: no factors");
  std::vector<Exponent> acc = gs.front().support();
  for (size_t i = 1; i < gs.size(); ++i) {
    std::vector<Exponent> next;
    for (const auto& a : acc) {
      for (const auto& b : gs[i].support()) next.push_back(a + b);
    }
    acc = dedup_sorted(std::move(next));
  }
  return acc;
}

bool is_convenient(const std::vector<Exponent>& points, int n) {
  for (int axis = 0; axis < n; ++axis) {
    bool hit = false;
    for (const auto& q : points) {
      bool on_axis = true;
      for (int j = 0; j < n; ++j) {
        if (j != axis && q.e[j] != 0) {
          on_axis = false;
          break;
        }
      }
      if (on_axis) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_bistellar(const NewtonPolyhedron& np) {
  for (size_t i = 0; i < np.facets.size(); ++i) {
    for (size_t j = i + 1; j < np.facets.size(); ++j) {
      const auto& a = np.facets[i].points;
      const auto& b = np.facets[j].points;
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) return false;
    }
  }
  return true;
}

IntVec nu_row(const Polynomial& g, const std::vector<IntVec>& normals) {
  if (g.is_zero()) throw std::invalid_argument("nu_row: zero polynomial");
  IntVec row;
  row.reserve(normals.size());
  for (const auto& p : normals) {
    bool first = true;
    Int best = 0;
    for (const auto& q : g.support()) {
      const Int v = dot(p, q.e);
      if (first || v < best) best = v;
      first = false;
    }
    row.push_back(best);
  }
  return row;
}

std::vector<IntVec> nu_matrix(const std::vector<Polynomial>& gs, const std::vector<IntVec>& normals) {
  std::vector<IntVec> rows;
  rows.reserve(gs.size());
  for (const auto& g : gs) rows.push_back(nu_row(g, normals));
  return rows;
}

Polynomial initial_part(const Polynomial& g, const std::vector<IntVec>& normals, const std::vector<int>& facet_subset) {
  std::vector<IntVec> chosen;
  for (int j : facet_subset) chosen.push_back(normals.at(static_cast<size_t>(j)));
  const IntVec minima = nu_row(g, chosen);
  Polynomial out(g.nvars());
  for (const auto& [q, c] : g.terms()) {
    bool keep = true;
    for (size_t j = 0; j < chosen.size(); ++j) {
      if (dot(chosen[j], q.e) != minima[j]) {
        keep = false;
        break;
      }
    }
    if (keep) out.add_term(q, c);
  }
  return out;
}

Polynomial initial_part_cone(const Polynomial& g, const std::vector<int>& axis_vars,
                             const std::vector<IntVec>& cone_normals, const std::vector<Int>& thresholds) {
  std::vector<Rational> rat;
  rat.reserve(thresholds.size());
  for (Int t : thresholds) rat.emplace_back(t);
  return initial_part_cone(g, axis_vars, cone_normals, rat);
}

Polynomial initial_part_cone(const Polynomial& g, const std::vector<int>& axis_vars,
                             const std::vector<IntVec>& cone_normals, const std::vector<Rational>& thresholds) {
  if (cone_normals.size() != thresholds.size()) throw std::invalid_argument("initial_part_cone: size mismatch");
  Polynomial out(g.nvars());
  for (const auto& [q, c] : g.terms()) {
    bool keep = true;
    for (int v : axis_vars) {
      if (q.e.at(static_cast<size_t>(v)) != 0) {
        keep = false;
        break;
      }
    }
    for (size_t j = 0; keep && j < cone_normals.size(); ++j) {
      if (Rational(dot(cone_normals[j], q.e)) != thresholds[j]) keep = false;
    }
    if (keep) out.add_term(q, c);
  }
  return out;
}

Polytope make_polytope(std::vector<Exponent> points) {
  if (points.empty()) throw std::invalid_argument("make_polytope: empty point set");
  Polytope p;
  p.n = static_cast<int>(points.front().e.size());
  p.points = dedup_sorted(std::move(points));
  return p;
}

int affine_dim(const std::vector<Exponent>& points) {
  if (points.empty()) return -1;
  QMat diff;
  for (size_t i = 1; i < points.size(); ++i) {
    QVec row;
    for (size_t j = 0; j < points[i].e.size(); ++j) row.emplace_back(points[i].e[j] - points[0].e[j]);
    diff.push_back(std::move(row));
  }
  return rank_of(diff);
}

bool is_full(const Polytope& p) { return affine_dim(p.points) == p.n; }

std::vector<int> min_face(const Polytope& p, const IntVec& normal) {
  std::vector<int> out;
  bool first = true;
  Int best = 0;
  for (size_t i = 0; i < p.points.size(); ++i) {
    const Int v = dot(normal, p.points[i].e);
    if (first || v < best) {
      best = v;
      out.clear();
      first = false;
    }
    if (v == best) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<PolytopeFacet> polytope_facets(const Polytope& p) {
  if (!is_full(p)) throw std::invalid_argument("polytope_facets: polytope is not full-dimensional");
  const int n = p.n;
  const int m = static_cast<int>(p.points.size());
  std::map<IntVec, PolytopeFacet> found;
  std::set<IntVec> seen;  // hyperplanes keyed by sign-canonical normal plus offset
  HyperplaneSolver solver(n);
  for_each_subset(m, n, [&](const std::vector<int>& subset) {
    IntVec normal = solver.normal_through(p.points, subset);
    if (normal.empty()) return;
    IntVec key = normal;
    for (Int c : key) {
      if (c != 0) {
        if (c < 0) {
          for (Int& x : key) x = -x;
        }
        break;
      }
    }
    key.push_back(dot(key, p.points[subset[0]].e));
    if (!seen.insert(key).second) return;
    IntVec flipped(normal.size());
    for (size_t i = 0; i < normal.size(); ++i) flipped[i] = -normal[i];
    Int lo = 0, hi = 0;
    bool first = true;
    for (const auto& q : p.points) {
      const Int v = dot(normal, q.e);
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
    const Int base = dot(normal, p.points[subset[0]].e);
    IntVec inner;
    Int offset = 0;
    if (base == lo && base != hi) {
      inner = normal;
      offset = lo;
    } else if (base == hi && base != lo) {
      inner = flipped;
      offset = -hi;
    } else {
      return;  // hyperplane cuts the polytope or degenerates
    }
    PolytopeFacet f;
    f.normal = inner;
    f.offset = offset;
    for (int i = 0; i < m; ++i) {
      if (dot(inner, p.points[i].e) == offset) f.points.push_back(i);
    }
    found.emplace(f.normal, std::move(f));
  });
  std::vector<PolytopeFacet> out;
  out.reserve(found.size());
  for (auto& [normal, facet] : found) out.push_back(std::move(facet));
  return out;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.n != b.n) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<Exponent> sums;
  sums.reserve(a.points.size() * b.points.size());
  for (const auto& x : a.points) {
    for (const auto& y : b.points) sums.push_back(x + y);
  }
  return make_polytope(std::move(sums));
}

std::vector<IntVec> minkowski_facet_normals(const Polytope& a, const Polytope& b) {
  if (a.n != b.n) throw std::invalid_argument("minkowski_facet_normals: dimension mismatch");
  const int n = a.n;
  {
    QMat dirs;
    for (size_t i = 1; i < a.points.size(); ++i) {
      QVec row;
      for (int j = 0; j < n; ++j) row.emplace_back(a.points[i].e[j] - a.points[0].e[j]);
      dirs.push_back(std::move(row));
    }
    for (size_t i = 1; i < b.points.size(); ++i) {
      QVec row;
      for (int j = 0; j < n; ++j) row.emplace_back(b.points[i].e[j] - b.points[0].e[j]);
      dirs.push_back(std::move(row));
    }
    if (rank_of(std::move(dirs)) != n) {
      throw std::invalid_argument("minkowski_facet_normals: sum is not full-dimensional");
    }
  }
  std::set<IntVec> result;
  // A candidate normal is accepted when the faces it selects in the two
  // summands together span a hyperplane, which is exactly when their sum is a
  // facet of a + b.
  auto consider = [&](const IntVec& v) {
    if (v.empty() || result.count(v)) return;
    const std::vector<int> fa = min_face(a, v);
    const std::vector<int> fb = min_face(b, v);
    QMat dirs;
    for (size_t t = 1; t < fa.size(); ++t) {
      QVec row;
      for (int j = 0; j < n; ++j) row.emplace_back(a.points[fa[t]].e[j] - a.points[fa[0]].e[j]);
      dirs.push_back(std::move(row));
    }
    for (size_t t = 1; t < fb.size(); ++t) {
      QVec row;
      for (int j = 0; j < n; ++j) row.emplace_back(b.points[fb[t]].e[j] - b.points[fb[0]].e[j]);
      dirs.push_back(std::move(row));
    }
    if (rank_of(std::move(dirs)) == n - 1) result.insert(v);
  };
  HyperplaneSolver solver(n);
  const int ma = static_cast<int>(a.points.size());
  const int mb = static_cast<int>(b.points.size());
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::vector<Exponent> pts(n);
  // Every facet has an affine basis drawn from the two point sets: ka points
  // of a and n + 1 - ka points of b sharing one base point per summand.
  for (int ka = 1; ka <= n; ++ka) {
    const int kb = n + 1 - ka;
    if (ka > ma || kb < 1 || kb > mb) continue;
    for_each_subset(ma, ka, [&](const std::vector<int>& sa) {
      for_each_subset(mb, kb, [&](const std::vector<int>& sb) {
        int at = 0;
        for (int i = 0; i < ka; ++i) pts[at++] = a.points[sa[i]] + b.points[sb[0]];
        for (int i = 1; i < kb; ++i) pts[at++] = a.points[sa[0]] + b.points[sb[i]];
        const IntVec v = solver.normal_through(pts, identity);
        if (v.empty()) return;
        consider(v);
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
        consider(w);
      });
    });
  }
  return {result.begin(), result.end()};
}

}  // namespace nfw
