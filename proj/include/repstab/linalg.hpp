#pragma once

#include <vector>

#include "repstab/rational.hpp"

namespace repstab {

// Reduced row echelon basis of a subspace of Q^cols, built incrementally.
// Every stored row has a unit pivot whose column is zero in all other rows,
// so the pivot-column submatrix is an identity and the basis doubles as an
// exact projector onto the subspace.
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index cols) : cols_(cols) {}

  // Reduces v against the basis; if a nonzero residual remains it joins the
  // basis (leftmost pivot, renormalized, back-eliminated). Returns true if
  // the rank grew.
  bool insert(RowVectorQ v);
  bool contains(RowVectorQ v) const;
  // residual after reduction (zero iff contained)
  RowVectorQ reduce(RowVectorQ v) const;

  Eigen::Index cols() const { return cols_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  const std::vector<RowVectorQ>& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  // Rows sorted by pivot column.
  MatrixQ matrix() const;

  // tr(A restricted to the row space), assuming A maps the row space into
  // itself; computed as tr(P A) with P the pivot-column projector.
  Rational restricted_trace(const MatrixQ& a) const;

 private:
  Eigen::Index cols_;
  std::vector<RowVectorQ> rows_;
  std::vector<Eigen::Index> pivots_;
};

// RREF basis of the row space.
EchelonBasis row_space(const MatrixQ& m);

// { x : a x = 0 } as a row-space basis with unit coordinates on the free
// columns of a.
EchelonBasis kernel_space(const MatrixQ& a);

// column space of a = row space of a^T
EchelonBasis column_space(const MatrixQ& a);

long long rank_of(const MatrixQ& m);

}  // namespace repstab
