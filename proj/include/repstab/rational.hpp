#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace repstab {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

// "p" or "p/q", canonicalized.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace repstab

namespace Eigen {

// mpq_class is a non-POD heap-backed type; RequireInitialization keeps Eigen
// from memcpy'ing it. All thresholds are zero: arithmetic is exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace repstab {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

MatrixQ identityQ(Eigen::Index d);
bool is_zero(const MatrixQ& m);

inline bool is_zero(const Rational& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

}  // namespace repstab
