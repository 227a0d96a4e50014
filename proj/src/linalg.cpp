#include "nfw/linalg.hpp"

#include <algorithm>

namespace nfw {

std::vector<int> rref_inplace(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

int rank_of(QMat m) { return static_cast<int>(rref_inplace(m).size()); }

QMat kernel_basis(const QMat& m, int ncols) {
  QMat a = m;
  std::vector<int> pivots = rref_inplace(a);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat out;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
  size_t rows = a.size();
  if (rows == 0) return QVec{};
  size_t cols = a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref_inplace(a);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == static_cast<int>(cols)) return std::nullopt;
  QVec x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

Subspace Subspace::span(QMat generators, int ambient) {
  Subspace s(ambient);
  rref_inplace(generators);
  s.rows_ = std::move(generators);
  s.dim_ = static_cast<int>(s.rows_.size());
  return s;
}

bool Subspace::contains(const QVec& v) const {
  QVec w = v;
  // Reduce against the RREF rows; zero remainder means membership.
  for (const QVec& row : rows_) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (w[lead] == 0) continue;
    Rational f = w[lead];
    for (size_t j = lead; j < w.size(); ++j) w[j] -= f * row[j];
  }
  for (const Rational& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const QVec& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  QMat gen = rows_;
  gen.insert(gen.end(), other.rows_.begin(), other.rows_.end());
  return span(std::move(gen), ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersect: ambient mismatch");
  if (dim_ == 0 || other.dim_ == 0) return Subspace(ambient_);
  // Columns are the generators of both spaces; kernel vectors combine
  // generators of this space into elements of the other.
  size_t a = rows_.size(), b = other.rows_.size();
  QMat m(ambient_, QVec(a + b, Rational(0)));
  for (size_t j = 0; j < a; ++j)
    for (int i = 0; i < ambient_; ++i) m[i][j] = rows_[j][i];
  for (size_t j = 0; j < b; ++j)
    for (int i = 0; i < ambient_; ++i) m[i][a + j] = -other.rows_[j][i];
  QMat ker = kernel_basis(m, static_cast<int>(a + b));
  QMat gen;
  for (const QVec& k : ker) {
    QVec x(ambient_, Rational(0));
    for (size_t j = 0; j < a; ++j)
      for (int i = 0; i < ambient_; ++i) x[i] += k[j] * rows_[j][i];
    gen.push_back(std::move(x));
  }
  return span(std::move(gen), ambient_);
}

bool lp_feasible(QMat a, QVec b) {
  size_t m = a.size();
  if (m == 0) return true;
  size_t n = a[0].size();
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& x : a[i]) x = -x;
    }
  }
  // Tableau with artificial basis; minimize the sum of artificials.
  size_t total = n + m;
  QMat t(m + 1, QVec(total + 1, Rational(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
    basis[i] = n + i;
  }
  for (size_t j = 0; j <= total; ++j) {
    Rational s(0);
    for (size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = -s;  // objective row: negative column sums of artificial rows
  }
  for (size_t j = n; j < total; ++j) t[m][j] = 0;
  for (;;) {
    size_t enter = total;
    for (size_t j = 0; j < total; ++j) {
      if (t[m][j] < 0) {  // Bland: first improving column
        enter = j;
        break;
      }
    }
    if (enter == total) break;
    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rational cur = t[i][total] / t[i][enter];
      Rational best = t[leave][total] / t[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) return false;  // unbounded phase one cannot happen; guard anyway
    Rational piv = t[leave][enter];
    for (size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[m][total] == 0;
}

Rational det_rational(QMat a) {
  const size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("det_rational: matrix not square");
  }
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

}  // namespace nfw
