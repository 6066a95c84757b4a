#ifndef LATTICECM_NUMERIC_HPP
#define LATTICECM_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Dense>

// Eigen needs NumTraits for custom scalar types.  GMP's mpz_class and
// mpq_class are exact, so epsilon and dummy_precision are zero and the
// cost constants only steer Eigen's unrolling heuristics.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
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

namespace latticecm {

using Int = mpz_class;
using Rational = mpq_class;
using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

// Floor division with the sign convention of mathematics, not C.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// mpq_class keeps denominators positive and canonical, so floor/ceil
// reduce to floor/ceil division of numerator by denominator.
inline Int rational_floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rational_ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

// u = u_+ - u_- with both parts nonnegative.
inline IntVector positive_part(const IntVector& u) {
  IntVector p(u.size());
  for (Index i = 0; i < u.size(); ++i) p(i) = u(i) > 0 ? u(i) : Int(0);
  return p;
}

inline IntVector negative_part(const IntVector& u) {
  IntVector p(u.size());
  for (Index i = 0; i < u.size(); ++i) p(i) = u(i) < 0 ? Int(-u(i)) : Int(0);
  return p;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(const IntVector& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

// v / content(v); requires v nonzero.
inline IntVector primitive(const IntVector& v) {
  Int g = content(v);
  IntVector w(v.size());
  for (Index i = 0; i < v.size(); ++i) w(i) = v(i) / g;
  return w;
}

// Smallest positive s with s*v integral, times v.
inline IntVector clear_denominators(const RationalVector& v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, Int(v(i).get_den()));
  IntVector w(v.size());
  for (Index i = 0; i < v.size(); ++i)
    w(i) = Int(v(i).get_num()) * (l / Int(v(i).get_den()));
  return w;
}

inline Int cross2(const Int& x1, const Int& y1, const Int& x2, const Int& y2) {
  return x1 * y2 - y1 * x2;
}

}  // namespace latticecm

#endif  // LATTICECM_NUMERIC_HPP
