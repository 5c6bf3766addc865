#pragma once

#include <Eigen/Dense>

namespace kdv {

/// Dense container aliases shared by the templated numerics.
template <typename FloatType>
struct Types {
  using Scalar = FloatType;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
};

using Vector = Types<double>::Vector;
using Matrix = Types<double>::Matrix;

}  // namespace kdv
