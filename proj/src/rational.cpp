#include "repstab/rational.hpp"

#include <stdexcept>

namespace repstab {

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

MatrixQ identityQ(Eigen::Index d) {
  MatrixQ m = MatrixQ::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(const MatrixQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace repstab
