#pragma once

#include <Eigen/Dense>

#include "vmlattice/numtheory.hpp"

namespace vmlattice {

using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A point of [0,1]^s with exact coordinates numerators(j) / denominator.
struct RationalPoint {
  IntegerVector numerators;
  Integer denominator = 1;

  Eigen::Index dimension() const { return numerators.size(); }
  Eigen::VectorXd to_double() const {
    return numerators.cast<double>() / static_cast<double>(denominator);
  }
};

}  // namespace vmlattice
