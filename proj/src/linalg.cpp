#include "repstab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace repstab {

namespace {

Eigen::Index leftmost_nonzero(const RowVectorQ& v) {
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!is_zero(v[j])) return j;
  return -1;
}

}  // namespace

RowVectorQ EchelonBasis::reduce(RowVectorQ v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (is_zero(c)) continue;
    v -= c * rows_[i];
  }
  return v;
}

bool EchelonBasis::contains(RowVectorQ v) const {
  return leftmost_nonzero(reduce(std::move(v))) < 0;
}

bool EchelonBasis::insert(RowVectorQ v) {
  v = reduce(std::move(v));
  Eigen::Index p = leftmost_nonzero(v);
  if (p < 0) return false;
  v /= v[p];
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = rows_[i][p];
    if (is_zero(c)) continue;
    rows_[i] -= c * v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

MatrixQ EchelonBasis::matrix() const {
  std::vector<size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
  MatrixQ m(rank(), cols_);
  for (size_t i = 0; i < order.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows_[order[i]];
  return m;
}

Rational EchelonBasis::restricted_trace(const MatrixQ& a) const {
  if (a.rows() != cols_ || a.cols() != cols_)
    throw std::invalid_argument("restricted_trace: matrix shape mismatch");
  Rational t(0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const RowVectorQ& b = rows_[i];
    const Eigen::Index p = pivots_[i];
    for (Eigen::Index j = 0; j < cols_; ++j) {
      if (is_zero(b[j])) continue;
      t += b[j] * a(j, p);
    }
  }
  return t;
}

EchelonBasis row_space(const MatrixQ& m) {
  EchelonBasis basis(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) basis.insert(m.row(i));
  return basis;
}

EchelonBasis kernel_space(const MatrixQ& a) {
  EchelonBasis rref = row_space(a);
  const MatrixQ b = rref.matrix();
  std::vector<Eigen::Index> piv(rref.pivots());
  std::sort(piv.begin(), piv.end());
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (Eigen::Index p : piv) is_pivot[static_cast<size_t>(p)] = true;

  EchelonBasis ker(a.cols());
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    RowVectorQ x = RowVectorQ::Zero(a.cols());
    x[f] = 1;
    for (Eigen::Index r = 0; r < b.rows(); ++r) x[piv[static_cast<size_t>(r)]] = -b(r, f);
    ker.insert(std::move(x));
  }
  return ker;
}

EchelonBasis column_space(const MatrixQ& a) { return row_space(a.transpose()); }

long long rank_of(const MatrixQ& m) { return static_cast<long long>(row_space(m).rank()); }

}  // namespace repstab
