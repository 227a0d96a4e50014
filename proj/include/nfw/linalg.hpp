#pragma once

#include <optional>

#include "nfw/base.hpp"

namespace nfw {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_inplace(QMat& m);

int rank_of(QMat m);

// Basis of {x : m x = 0} (right kernel), rows of the result.
QMat kernel_basis(const QMat& m, int ncols);

// Solves a x = b exactly; nullopt when inconsistent.  When the solution is
// underdetermined an arbitrary member of the affine solution set is returned.
std::optional<QVec> solve_linear(QMat a, QVec b);

// Linear subspace of Q^d in canonical form: RREF rows, no zero rows.  Equal
// subspaces compare equal componentwise.
class Subspace {
 public:
  Subspace() : dim_(0), ambient_(0) {}
  explicit Subspace(int ambient) : dim_(0), ambient_(ambient) {}

  static Subspace span(QMat generators, int ambient);

  int dim() const { return dim_; }
  int ambient() const { return ambient_; }
  const QMat& basis() const { return rows_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  int dim_;
  int ambient_;
  QMat rows_;
};

// Exact feasibility of {x >= 0 : a x = b} via phase-one simplex with Bland's
// rule.  Used for vertex membership tests; problem sizes stay tiny.
bool lp_feasible(QMat a, QVec b);

// Determinant of a square matrix by exact Gaussian elimination.
Rational det_rational(QMat a);

}  // namespace nfw
