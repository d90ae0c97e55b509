#pragma once

#include "sra/exactnum.hpp"

#include <Eigen/Core>

namespace Eigen {

namespace detail_sra {
template <typename T>
struct ExactTraits {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static T highest() { return T(0); }
  static T lowest() { return T(0); }
  static int digits10() { return 0; }
};
}  // namespace detail_sra

template <>
struct NumTraits<sra::Rational> : detail_sra::ExactTraits<sra::Rational> {};
template <>
struct NumTraits<sra::Cyclo> : detail_sra::ExactTraits<sra::Cyclo> {};

}  // namespace Eigen

namespace sra {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace sra
