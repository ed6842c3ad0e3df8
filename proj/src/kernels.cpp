#include "vmlattice/kernels.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace vmlattice {

ProductWeights::ProductWeights(Eigen::VectorXd gamma) : gamma_(std::move(gamma)) {
  if (gamma_.size() < 1) throw DimensionError("product weights need at least one dimension");
  for (Eigen::Index j = 0; j < gamma_.size(); ++j) {
    if (!(gamma_(j) > 0.0) || !std::isfinite(gamma_(j))) {
      throw DomainError("product weight gamma_" + std::to_string(j + 1) + " must be positive");
    }
  }
}

double ProductWeights::subset_product(unsigned mask) const {
  double p = 1.0;
  for (Eigen::Index j = 0; j < gamma_.size(); ++j) {
    if (mask & (1U << j)) p *= gamma_(j);
  }
  return p;
}

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::korobov1:
      return "korobov1";
    case KernelKind::multilinear:
      return "multilinear";
    case KernelKind::usobolev1:
      return "usobolev1";
  }
  return "unknown";
}

RationalNode fractional_difference(Integer x_num, Integer x_den, Integer y_num, Integer y_den) {
  if (x_den == y_den) {
    Integer d = (x_num - y_num) % x_den;
    if (d < 0) d += x_den;
    return {d, x_den};
  }
  const __int128 den = static_cast<__int128>(x_den) * y_den;
  if (den > INT64_MAX) throw Overflow("common denominator of kernel arguments exceeds 64 bits");
  __int128 d = (static_cast<__int128>(x_num) * y_den - static_cast<__int128>(y_num) * x_den) % den;
  if (d < 0) d += den;
  return {static_cast<Integer>(d), static_cast<Integer>(den)};
}

double kernel_excess(KernelKind kind, const RationalPoint& x, const RationalPoint& y, const ProductWeights& gamma) {
  if (x.dimension() != y.dimension() || x.dimension() != gamma.dimension()) {
    throw DimensionError("kernel arguments have inconsistent dimensions");
  }
  detail::ExcessProduct<double> p;
  for (Eigen::Index j = 0; j < x.dimension(); ++j) {
    const RationalNode xj(x.numerators(j), x.denominator);
    const RationalNode yj(y.numerators(j), y.denominator);
    const RationalNode diff = fractional_difference(xj.numerator, xj.denominator, yj.numerator, yj.denominator);
    p.multiply(detail::kernel_factor_excess(kind, gamma[j], bernoulli1(xj), bernoulli1(yj), bernoulli2(diff)));
  }
  return p.value();
}

double kernel(KernelKind kind, const RationalPoint& x, const RationalPoint& y, const ProductWeights& gamma) {
  return 1.0 + kernel_excess(kind, x, y, gamma);
}

}  // namespace vmlattice
