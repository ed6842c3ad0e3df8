#include "vmlattice/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vmlattice/convolution.hpp"
#include "vmlattice/parallel.hpp"
#include "vmlattice/rules.hpp"
#include "vmlattice/special.hpp"

namespace vmlattice {

namespace {

constexpr double kPi = std::numbers::pi;

Modulus require_prime(Modulus n) {
  if (!is_prime(n.value())) throw NotPrime(std::to_string(n.value()) + " is not prime");
  if (n.value() < 3) throw DomainError("generator search needs a prime N >= 3");
  return n;
}

void require_two_weights(const ProductWeights& gamma) {
  if (gamma.dimension() != 2) throw DimensionError("generator search is two-dimensional");
}

Eigen::VectorXd per_generator_from_group(const GroupIndexing& group, const Eigen::VectorXd& by_exponent) {
  const Integer n = group.modulus().value();
  Eigen::VectorXd out = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::quiet_NaN());
  for (Eigen::Index beta = 0; beta < group.order(); ++beta) out(group.residue(beta)) = by_exponent(beta);
  return out;
}

}  // namespace

GroupIndexing::GroupIndexing(Modulus n) : n_(require_prime(n)), g_(primitive_root(n)) {
  const Integer order = n.value() - 1;
  powers_.resize(static_cast<std::size_t>(order));
  logs_.assign(static_cast<std::size_t>(n.value()), -1);
  Integer r = 1;
  for (Integer beta = 0; beta < order; ++beta) {
    powers_[static_cast<std::size_t>(beta)] = r;
    logs_[static_cast<std::size_t>(r)] = static_cast<Eigen::Index>(beta);
    r = mul_mod(r, g_, n_);
  }
}

Integer GroupIndexing::residue(Eigen::Index beta) const {
  const Eigen::Index order = this->order();
  Eigen::Index b = beta % order;
  if (b < 0) b += order;
  return powers_[static_cast<std::size_t>(b)];
}

Eigen::Index GroupIndexing::exponent(Integer r) const {
  const Integer reduced = reduce(r, n_);
  if (reduced == 0) throw DomainError("0 is not in the multiplicative group");
  return logs_[static_cast<std::size_t>(reduced)];
}

Eigen::VectorXd all_z_mixture(Modulus n, const ProductWeights& gamma) {
  require_two_weights(gamma);
  const GroupIndexing group(n);
  const double nd = static_cast<double>(n.value());
  const double n2 = nd * nd;
  const auto a = group_vector(group, [&](Integer r) {
    const double c = cot_pi_rational(r, n);
    return c * c;
  });
  const auto b = group_vector_inverse(group, [&](Integer h) { return hurwitz_zeta2(static_cast<double>(h) / nd) / n2; });
  // conv[beta] = sum_{h >= 1, h != 0 mod N} cot^2(pi h g^beta / N) / h^2
  const Eigen::VectorXd conv = cyclic_convolution(a.values, b.values);
  const Eigen::Index order = group.order();
  const double scale = gamma[0] * gamma[1] / (8.0 * kPi * kPi * n2);
  Eigen::VectorXd by_exponent(order);
  for (Eigen::Index beta = 0; beta < order; ++beta) {
    const Eigen::Index inverse = (order - beta) % order;
    by_exponent(beta) = scale * (conv(beta) + conv(inverse));
  }
  return per_generator_from_group(group, by_exponent);
}

Eigen::VectorXd all_z_korobov(Modulus n, const ProductWeights& gamma) {
  require_two_weights(gamma);
  const GroupIndexing group(n);
  const Integer size = n.value();
  const double nd = static_cast<double>(size);
  // 2 pi^2 (gamma / (2 pi)^2) = gamma / 2
  const double c1 = gamma[0] / 2.0;
  const double c2 = gamma[1] / 2.0;
  const auto a = group_vector(group, [&](Integer r) { return bernoulli2(RationalNode(r, size)); });
  const auto b = group_vector_inverse(group, [&](Integer h) { return bernoulli2(RationalNode(h, size)); });
  const Eigen::VectorXd conv = cyclic_convolution(a.values, b.values);
  // (1/N) sum_k B2(k/N) = 1/(6 N^2); the k = 0 cross term is B2(0)^2 = 1/36
  const double marginal = (c1 + c2) / (6.0 * nd * nd);
  Eigen::VectorXd by_exponent(group.order());
  for (Eigen::Index beta = 0; beta < group.order(); ++beta) {
    by_exponent(beta) = marginal + c1 * c2 / nd * (1.0 / 36.0 + conv(beta));
  }
  return per_generator_from_group(group, by_exponent);
}

SearchResult best_generator(Modulus n, const ProductWeights& gamma, bool keep_rows) {
  const Eigen::VectorXd korobov = all_z_korobov(n, gamma);
  const Eigen::VectorXd mixture = all_z_mixture(n, gamma);
  SearchResult result;
  result.N = n.value();
  result.sq_total = std::numeric_limits<double>::infinity();
  std::vector<SearchRow> rows;
  if (keep_rows) rows.reserve(static_cast<std::size_t>(n.value() - 1));
  for (Integer z = 1; z < n.value(); ++z) {
    const SearchRow row{z, korobov(z) + mixture(z), korobov(z), mixture(z)};
    if (row.sq_total < result.sq_total) {
      result.z_best = z;
      result.sq_total = row.sq_total;
      result.sq_korobov = row.sq_korobov;
      result.mixture = row.mixture;
    }
    if (keep_rows) rows.push_back(row);
  }
  if (keep_rows) result.all_rows = std::move(rows);
  return result;
}

std::vector<SearchResult> reproduce_table(const std::vector<Integer>& primes, const ProductWeights& gamma,
                                          unsigned jobs, bool keep_rows) {
  for (auto p : primes) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  }
  std::vector<SearchResult> results(primes.size());
  run_parallel(primes.size(), jobs,
               [&](std::size_t i) { results[i] = best_generator(Modulus(primes[i]), gamma, keep_rows); });
  return results;
}

FibonacciEvaluation fibonacci_rule(int k, const ProductWeights& gamma) {
  if (k < 4) throw DomainError("Fibonacci rules are evaluated for k >= 4");
  require_two_weights(gamma);
  FibonacciEvaluation out;
  out.k = k;
  out.N = fibonacci(k);
  out.z = fibonacci(k - 1);
  const LatticeRule lattice({1, out.z}, out.N);
  out.breakdown.sq_korobov = wce_korobov_lattice_squared(lattice, gamma.scaled(1.0 / (4.0 * kPi * kPi)));
  out.breakdown.sq_multilinear = wce_multilinear_squared(build_rule(lattice, Scheme::optimal), gamma.scaled(1.0 / 12.0));
  out.halves = mixture_term_s2(lattice, gamma);
  out.breakdown.mixture = out.halves.total();
  out.breakdown.sq_total = out.breakdown.sq_multilinear + out.breakdown.sq_korobov + out.breakdown.mixture;
  const double scale = std::max(std::abs(out.halves.term_w1), std::abs(out.halves.term_w2));
  out.halves_equal = std::abs(out.halves.term_w1 - out.halves.term_w2) <= 1e-12 * scale;
  return out;
}

}  // namespace vmlattice
