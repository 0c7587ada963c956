#pragma once

// Registers the exact scalar types with Eigen so they can be used as the
// coefficient type of dense matrices and vectors.

#include <Eigen/Core>

#include "kmloop/dual.hpp"
#include "kmloop/laurent.hpp"
#include "kmloop/rational.hpp"
#include "kmloop/scalar.hpp"

namespace kmloop::detail {

template <typename T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};

}  // namespace kmloop::detail

namespace Eigen {
template <>
struct NumTraits<kmloop::Rational> : kmloop::detail::ExactNumTraits<kmloop::Rational> {};
template <>
struct NumTraits<kmloop::Scalar> : kmloop::detail::ExactNumTraits<kmloop::Scalar> {};
template <>
struct NumTraits<kmloop::LaurentPoly> : kmloop::detail::ExactNumTraits<kmloop::LaurentPoly> {};
template <>
struct NumTraits<kmloop::DualNumber> : kmloop::detail::ExactNumTraits<kmloop::DualNumber> {};
}  // namespace Eigen

namespace kmloop {

template <typename T>
using ExactMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using ExactVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Zero test that works for every coefficient type used here.
template <typename T>
bool is_zero(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) {
    return x == 0;
  } else {
    return x.is_zero();
  }
}

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace kmloop
