#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "vmlattice/errors.hpp"
#include "vmlattice/special.hpp"
#include "vmlattice/types.hpp"

namespace vmlattice {

/// Product weights gamma_j > 0, one per dimension.
class ProductWeights {
 public:
  explicit ProductWeights(Eigen::VectorXd gamma);

  static ProductWeights ones(Eigen::Index s) { return ProductWeights(Eigen::VectorXd::Ones(s)); }
  static ProductWeights constant(Eigen::Index s, double value) {
    return ProductWeights(Eigen::VectorXd::Constant(s, value));
  }

  Eigen::Index dimension() const { return gamma_.size(); }
  double operator[](Eigen::Index j) const { return gamma_(j); }
  const Eigen::VectorXd& values() const { return gamma_; }

  /// gamma_u for the subset u encoded as a bit mask (bit j <-> dimension j).
  double subset_product(unsigned mask) const;

  ProductWeights scaled(double factor) const { return ProductWeights(gamma_ * factor); }

 private:
  Eigen::VectorXd gamma_;
};

enum class KernelKind { korobov1, multilinear, usobolev1 };

const char* to_string(KernelKind kind);

namespace detail {

// One-dimensional factor of each product kernel, given B1(x), B1(y) and B2({x-y}).
template <typename Scalar>
Scalar kernel_factor_excess(KernelKind kind, Scalar gamma, Scalar b1x, Scalar b1y, Scalar b2diff) {
  constexpr Scalar two_pi_sq = 2 * std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar>;
  switch (kind) {
    case KernelKind::korobov1:
      return two_pi_sq * gamma * b2diff;
    case KernelKind::multilinear:
      return 12 * gamma * (b1x * b1y);
    case KernelKind::usobolev1:
      return gamma * (b1x * b1y) + gamma * b2diff / 2;
  }
  return Scalar(0);
}

// prod_j (1 + t_j) - 1 without forming the product and subtracting.
template <typename Scalar>
class ExcessProduct {
 public:
  void multiply(Scalar t) { excess_ += t + excess_ * t; }
  Scalar value() const { return excess_; }

 private:
  Scalar excess_{0};
};


template <typename DX, typename DY>
typename DX::Scalar kernel_excess(KernelKind kind, const Eigen::MatrixBase<DX>& x,
                                  const Eigen::MatrixBase<DY>& y, const ProductWeights& gamma) {
  if (x.size() != y.size() || x.size() != gamma.dimension()) {
    throw DimensionError("kernel arguments have inconsistent dimensions");
  }
  using Scalar = typename DX::Scalar;
  ExcessProduct<Scalar> p;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    // B2({x-y}) = B2(|x-y|) on [0,1]; the absolute value keeps K(x,y) = K(y,x) exactly.
    const Scalar diff = std::abs(x(j) - y(j));
    p.multiply(kernel_factor_excess<Scalar>(kind, Scalar(gamma[j]), bernoulli1<Scalar>(x(j)),
                                            bernoulli1<Scalar>(y(j)), bernoulli2<Scalar>(diff)));
  }
  return p.value();
}

}  // namespace detail

/// K(x, y) - 1 on real points. Computed without cancellation against 1.
template <typename DX, typename DY>
typename DX::Scalar kernel_excess(KernelKind kind, const Eigen::MatrixBase<DX>& x,
                                  const Eigen::MatrixBase<DY>& y, const ProductWeights& gamma) {
  return detail::kernel_excess(kind, x, y, gamma);
}

template <typename DX, typename DY>
typename DX::Scalar kernel(KernelKind kind, const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                           const ProductWeights& gamma) {
  return typename DX::Scalar(1) + detail::kernel_excess(kind, x, y, gamma);
}

/// prod_j (1 + 2 pi^2 gamma_j B2({x_j - y_j})).
template <typename DX, typename DY>
typename DX::Scalar korobov1_kernel(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                                    const ProductWeights& gamma) {
  return kernel(KernelKind::korobov1, x, y, gamma);
}

/// prod_j (1 + 12 gamma_j B1(x_j) B1(y_j)); the subset sum over g_u(x) g_u(y).
template <typename DX, typename DY>
typename DX::Scalar multilinear_kernel(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                                       const ProductWeights& gamma) {
  return kernel(KernelKind::multilinear, x, y, gamma);
}

/// Unanchored Sobolev kernel of smoothness 1:
/// prod_j (1 + gamma_j B1(x_j) B1(y_j) + gamma_j B2({x_j - y_j}) / 2).
template <typename DX, typename DY>
typename DX::Scalar usobolev1_kernel(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                                     const ProductWeights& gamma) {
  return kernel(KernelKind::usobolev1, x, y, gamma);
}

/// {x - y} on exact coordinates, as a node over the common denominator.
RationalNode fractional_difference(Integer x_num, Integer x_den, Integer y_num, Integer y_den);

/// Kernel evaluation on exact points; the wrap-around {x - y} is exact.
double kernel_excess(KernelKind kind, const RationalPoint& x, const RationalPoint& y, const ProductWeights& gamma);
double kernel(KernelKind kind, const RationalPoint& x, const RationalPoint& y, const ProductWeights& gamma);

}  // namespace vmlattice
