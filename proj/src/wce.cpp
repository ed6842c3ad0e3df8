#include "vmlattice/wce.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vmlattice/special.hpp"
#include "vmlattice/summation.hpp"

namespace vmlattice {

namespace {

constexpr double kPi = std::numbers::pi;

void require_normalised(const WeightedRule& rule) {
  const double sum = rule.weight_sum();
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw WeightSumError("cubature weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

void require_dimension(const WeightedRule& rule, const ProductWeights& gamma) {
  if (rule.dimension() != gamma.dimension()) {
    throw DimensionError("rule has dimension " + std::to_string(rule.dimension()) + " but weights have " +
                         std::to_string(gamma.dimension()));
  }
}

// B1 of every node coordinate, row-major (node, dimension).
Eigen::MatrixXd node_b1(const WeightedRule& rule) {
  Eigen::MatrixXd b1(rule.size(), rule.dimension());
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    for (Eigen::Index j = 0; j < rule.dimension(); ++j) b1(i, j) = bernoulli1(rule.nodes().coordinate(i, j));
  }
  return b1;
}

double wrapped_b2(Integer a, Integer b, Integer den) {
  Integer d = (a - b) % den;
  if (d < 0) d += den;
  return bernoulli2(RationalNode(d, den));
}

// sum_{k,l} w_k w_l (K(x_k, x_l) - 1) for a product kernel.
double weighted_kernel_excess(const WeightedRule& rule, KernelKind kind, const ProductWeights& gamma) {
  const Eigen::MatrixXd b1 = node_b1(rule);
  const auto& num = rule.nodes().numerators;
  const Integer den = rule.denominator();
  const Eigen::Index m = rule.size();
  const Eigen::Index s = rule.dimension();
  CompensatedSum<double> total;
  for (Eigen::Index k = 0; k < m; ++k) {
    CompensatedSum<double> row;
    for (Eigen::Index l = 0; l < m; ++l) {
      detail::ExcessProduct<double> p;
      for (Eigen::Index j = 0; j < s; ++j) {
        p.multiply(detail::kernel_factor_excess(kind, gamma[j], b1(k, j), b1(l, j),
                                                wrapped_b2(num(k, j), num(l, j), den)));
      }
      row += rule.weight(l) * p.value();
    }
    total += rule.weight(k) * row.value();
  }
  return total.value();
}

double checked_sqrt(double sq) {
  if (sq < -kNegativeSquareTolerance) {
    throw NumericalConsistencyError("squared worst-case error is negative: " + std::to_string(sq));
  }
  return sq > 0.0 ? std::sqrt(sq) : 0.0;
}

Integer require_invertible(Integer w, Modulus n) { return mod_inverse(w, n); }

// zeta(2, h/N) / N^2 for h = 1..N-1 (index 0 unused).
std::vector<double> residue_tail_weights(Modulus n) {
  const Integer size = n.value();
  const double n2 = static_cast<double>(size) * static_cast<double>(size);
  std::vector<double> weights(static_cast<std::size_t>(size), 0.0);
  for (Integer h = 1; h < size; ++h) {
    weights[static_cast<std::size_t>(h)] = hurwitz_zeta2(static_cast<double>(h) / static_cast<double>(size)) / n2;
  }
  return weights;
}

double cot2_weighted_sum(Integer w, Modulus n, const std::vector<double>& weights) {
  CompensatedSum<double> sum;
  for (Integer h = n.value() - 1; h >= 1; --h) {
    const double c = cot_pi_rational(mul_mod(h, w, n), n);
    sum += c * c * weights[static_cast<std::size_t>(h)];
  }
  const double n2 = static_cast<double>(n.value()) * static_cast<double>(n.value());
  return sum.value() / n2;
}

}  // namespace

double wce_generic_squared(const WeightedRule& rule, KernelKind kind, const ProductWeights& gamma) {
  require_dimension(rule, gamma);
  require_normalised(rule);
  const double defect = 1.0 - rule.weight_sum();
  return weighted_kernel_excess(rule, kind, gamma) + defect * defect;
}

double wce_generic(const WeightedRule& rule, KernelKind kind, const ProductWeights& gamma) {
  return checked_sqrt(wce_generic_squared(rule, kind, gamma));
}

double wce_korobov_lattice_squared(const LatticeRule& rule, const ProductWeights& gamma) {
  if (rule.dimension() != gamma.dimension()) throw DimensionError("lattice and weights differ in dimension");
  constexpr double two_pi_sq = 2.0 * kPi * kPi;
  CompensatedSum<double> sum;
  for (Integer k = 0; k < rule.size(); ++k) {
    detail::ExcessProduct<double> p;
    for (Eigen::Index j = 0; j < rule.dimension(); ++j) {
      p.multiply(two_pi_sq * gamma[j] * bernoulli2(RationalNode(rule.numerator(k, j), rule.size())));
    }
    sum += p.value();
  }
  return sum.value() / static_cast<double>(rule.size());
}

double wce_korobov_lattice(const LatticeRule& rule, const ProductWeights& gamma) {
  return checked_sqrt(wce_korobov_lattice_squared(rule, gamma));
}

double wce_korobov_squared(const WeightedRule& rule, const ProductWeights& gamma) {
  require_dimension(rule, gamma);
  require_normalised(rule);
  return weighted_kernel_excess(rule, KernelKind::korobov1, gamma);
}

double wce_multilinear_squared(const WeightedRule& rule, const ProductWeights& gamma) {
  require_dimension(rule, gamma);
  require_normalised(rule);
  const Eigen::Index s = rule.dimension();
  const std::size_t subsets = std::size_t{1} << s;
  const Eigen::MatrixXd b1 = node_b1(rule);
  std::vector<CompensatedSum<double>> moments(subsets);
  std::vector<double> products(subsets);
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    products[0] = 1.0;
    std::size_t filled = 1;
    for (Eigen::Index j = 0; j < s; ++j) {
      for (std::size_t u = 0; u < filled; ++u) products[u + filled] = products[u] * b1(k, j);
      filled *= 2;
    }
    for (std::size_t u = 1; u < subsets; ++u) moments[u] += rule.weight(k) * products[u];
  }
  CompensatedSum<double> sq;
  for (std::size_t u = 1; u < subsets; ++u) {
    const double m = moments[u].value();
    const double scale = std::pow(12.0, std::popcount(static_cast<unsigned>(u))) *
                         gamma.subset_product(static_cast<unsigned>(u));
    sq += scale * m * m;
  }
  return sq.value();
}

double wce_multilinear(const WeightedRule& rule, const ProductWeights& gamma) {
  return checked_sqrt(wce_multilinear_squared(rule, gamma));
}

double mixture_direct(const WeightedRule& rule, const ProductWeights& gamma) {
  require_dimension(rule, gamma);
  require_normalised(rule);
  const Eigen::Index s = rule.dimension();
  if (s < 2) return 0.0;
  const unsigned subsets = 1U << s;
  const Eigen::MatrixXd b1 = node_b1(rule);
  const auto& num = rule.nodes().numerators;
  const Integer den = rule.denominator();
  std::vector<double> linear(subsets), periodic(subsets);
  CompensatedSum<double> total;
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    CompensatedSum<double> row;
    for (Eigen::Index l = 0; l < rule.size(); ++l) {
      linear[0] = periodic[0] = 1.0;
      unsigned filled = 1;
      for (Eigen::Index j = 0; j < s; ++j) {
        const double a = gamma[j] * b1(k, j) * b1(l, j);
        const double b = gamma[j] * wrapped_b2(num(k, j), num(l, j), den) / 2.0;
        for (unsigned u = 0; u < filled; ++u) {
          linear[u + filled] = linear[u] * a;
          periodic[u + filled] = periodic[u] * b;
        }
        filled *= 2;
      }
      // u non-empty, v a non-empty proper subset of u: linear on u \ v, periodic on v
      double pair = 0.0;
      for (unsigned u = 1; u < subsets; ++u) {
        for (unsigned v = (u - 1) & u; v != 0; v = (v - 1) & u) pair += linear[u ^ v] * periodic[v];
      }
      row += rule.weight(l) * pair;
    }
    total += rule.weight(k) * row.value();
  }
  return total.value();
}

WceBreakdown wce_decomposition(const WeightedRule& rule, const ProductWeights& gamma) {
  WceBreakdown out;
  out.sq_multilinear = wce_multilinear_squared(rule, gamma.scaled(1.0 / 12.0));
  out.sq_korobov = wce_korobov_squared(rule, gamma.scaled(1.0 / (4.0 * kPi * kPi)));
  out.mixture = mixture_direct(rule, gamma);
  out.sq_total = out.sq_multilinear + out.sq_korobov + out.mixture;
  return out;
}

std::complex<double> exp_b1_sum(Integer z, Integer theta, Modulus n) {
  const Integer z_inv = require_invertible(z, n);
  const Integer t = reduce(theta, n);
  if (t == 0) return {0.0, 0.0};
  const double c = cot_pi_rational(mul_mod(z_inv, t, n), n);
  return {0.0, -c / (2.0 * static_cast<double>(n.value()))};
}

std::complex<double> exp_b1_sum_direct(Integer z, Integer theta, Modulus n) {
  require_invertible(z, n);
  CompensatedSum<double> re, im;
  const double size = static_cast<double>(n.value());
  for (Integer k = 1; k < n.value(); ++k) {
    const double b1 = bernoulli1(RationalNode(mul_mod(z, k, n), n.value()));
    const double angle = 2.0 * kPi * static_cast<double>(mul_mod(theta, k, n)) / size;
    re += b1 * std::cos(angle);
    im += b1 * std::sin(angle);
  }
  return {re.value() / size, im.value() / size};
}

double cot2_sum_truncated(Integer w, Modulus n) {
  require_invertible(w, n);
  CompensatedSum<double> sum;
  for (Integer h = n.value() - 1; h >= 1; --h) {
    const double c = cot_pi_rational(mul_mod(h, w, n), n);
    const double hd = static_cast<double>(h);
    sum += c * c / (hd * hd);
  }
  const double n2 = static_cast<double>(n.value()) * static_cast<double>(n.value());
  return sum.value() / n2;
}

double cot2_sum_exact(Integer w, Modulus n) {
  require_invertible(w, n);
  return cot2_weighted_sum(w, n, residue_tail_weights(n));
}

namespace {

void require_two_dimensional(const LatticeRule& rule, const ProductWeights& gamma) {
  if (rule.dimension() != 2 || gamma.dimension() != 2) {
    throw DimensionError("closed-form mixture term requires s = 2");
  }
}

}  // namespace

MixturePair mixture_term_s2(const LatticeRule& rule, const ProductWeights& gamma) {
  require_two_dimensional(rule, gamma);
  const Modulus n = rule.modulus();
  const Integer z1 = rule.generator(0), z2 = rule.generator(1);
  MixturePair pair;
  pair.w1 = mul_mod(mod_inverse(z1, n), z2, n);
  pair.w2 = mul_mod(mod_inverse(z2, n), z1, n);
  const double scale = gamma[0] * gamma[1] / (8.0 * kPi * kPi);
  const auto weights = residue_tail_weights(n);
  pair.term_w1 = scale * cot2_weighted_sum(pair.w1, n, weights);
  pair.term_w2 = pair.w2 == pair.w1 ? pair.term_w1 : scale * cot2_weighted_sum(pair.w2, n, weights);
  return pair;
}

MixtureBounds mixture_bounds_s2(const LatticeRule& rule, const ProductWeights& gamma) {
  require_two_dimensional(rule, gamma);
  const Modulus n = rule.modulus();
  const Integer z1 = rule.generator(0), z2 = rule.generator(1);
  const Integer w1 = mul_mod(mod_inverse(z1, n), z2, n);
  const Integer w2 = mul_mod(mod_inverse(z2, n), z1, n);
  const double sums = cot2_sum_truncated(w1, n) + cot2_sum_truncated(w2, n);
  const double g = gamma[0] * gamma[1];
  return {g / (8.0 * kPi * kPi) * sums, g / 48.0 * sums};
}

double wce_trapezoid_1d(Integer n, double gamma1) {
  if (n < 1) throw DomainError("trapezoidal rule needs N >= 1");
  if (!(gamma1 > 0.0)) throw DomainError("gamma_1 must be positive");
  return std::sqrt(gamma1 / 12.0) / static_cast<double>(n);
}

AverageIdentities average_identities(Modulus n) {
  if (!is_prime(n.value())) throw NotPrime(std::to_string(n.value()) + " is not prime");
  if (n.value() < 3) throw DomainError("average identities need N >= 3");
  const Integer size = n.value();
  const double nd = static_cast<double>(size);
  const double count = nd - 1.0;
  AverageIdentities out;

  CompensatedSum<double> cot2;
  for (Integer w = 1; w < size; ++w) {
    const double c = cot_pi_rational(w, n);
    cot2 += c * c;
  }
  out.avg_cot2 = cot2.value() / count;
  out.rhs_dedekind = (nd - 2.0) / 3.0;

  CompensatedSum<double> s_sum, abs_sum;
  for (Integer w = 1; w < size; ++w) {
    s_sum += cot2_sum_truncated(w, n);
    CompensatedSum<double> inner;
    for (Integer h = size - 1; h >= 1; --h) {
      inner += std::abs(cot_pi_rational(mul_mod(h, w, n), n)) / static_cast<double>(h);
    }
    abs_sum += inner.value() / nd;
  }
  out.avg_S = s_sum.value() / count;
  out.rhs_avg = (nd - 2.0) / (3.0 * nd * nd) * harmonic(size - 1, 2.0);
  out.avg_abscot = abs_sum.value() / count;
  out.bound_abscot = harmonic(size - 1, 1.0) / nd * (6.0 / kPi) * std::log(nd);
  return out;
}

double prop4_bound(Modulus n, const ProductWeights& gamma, double kor_wce) {
  if (!is_prime(n.value())) throw NotPrime(std::to_string(n.value()) + " is not prime");
  if (n.value() < 3) throw DomainError("existence bound needs N >= 3");
  if (gamma.dimension() != 2) throw DimensionError("existence bound is two-dimensional");
  const double nd = static_cast<double>(n.value());
  const double log_n = std::log(nd);
  const double coefficient =
      11.0 * std::sqrt(2.0 * gamma[0] * gamma[1]) / (kPi * std::sqrt(48.0) * std::log(3.0));
  return kor_wce + coefficient * log_n * log_n / nd;
}

double ConjectureSums::deviation() const { return std::abs(with_z - with_inverse); }

ConjectureSums conjecture_sums(Integer z, Modulus n) {
  const Integer z_inv = require_invertible(z, n);
  const auto weights = residue_tail_weights(n);
  const double nd = static_cast<double>(n.value());
  // sum_{k,l} B1 B2 B1 = (1/(4 pi^2)) sum_{h >= 1, h != 0 mod N} cot^2(pi h z / N) / h^2
  const double scale = nd * nd / (4.0 * kPi * kPi);
  ConjectureSums out;
  out.with_z = scale * cot2_weighted_sum(reduce(z, n), n, weights);
  out.with_inverse = z_inv == reduce(z, n) ? out.with_z : scale * cot2_weighted_sum(z_inv, n, weights);
  return out;
}

namespace {

double bernoulli_double_sum(Integer z, Modulus n) {
  const Integer size = n.value();
  std::vector<double> b1(static_cast<std::size_t>(size));
  for (Integer k = 1; k < size; ++k) b1[static_cast<std::size_t>(k)] = bernoulli1(RationalNode(k, size));
  CompensatedSum<double> total;
  for (Integer k = 1; k < size; ++k) {
    CompensatedSum<double> row;
    for (Integer l = 1; l < size; ++l) {
      row += bernoulli2(RationalNode(mul_mod(z, k - l, n), size)) * b1[static_cast<std::size_t>(l)];
    }
    total += b1[static_cast<std::size_t>(k)] * row.value();
  }
  return total.value();
}

}  // namespace

ConjectureSums conjecture_sums_direct(Integer z, Modulus n) {
  const Integer z_inv = require_invertible(z, n);
  return {bernoulli_double_sum(reduce(z, n), n), bernoulli_double_sum(z_inv, n)};
}

double check_conjecture(Integer z, Modulus n) { return conjecture_sums(z, n).deviation(); }

}  // namespace vmlattice
