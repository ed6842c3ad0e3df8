#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vmlattice/kernels.hpp"
#include "vmlattice/numtheory.hpp"
#include "vmlattice/wce.hpp"

namespace vmlattice {

/// Exponent/residue tables for the cyclic group (Z/NZ)^x = <g>, N prime.
class GroupIndexing {
 public:
  explicit GroupIndexing(Modulus n);

  Modulus modulus() const { return n_; }
  Integer generator() const { return g_; }
  Eigen::Index order() const { return static_cast<Eigen::Index>(powers_.size()); }
  /// g^beta mod N for beta taken mod N-1.
  Integer residue(Eigen::Index beta) const;
  /// beta with g^beta = r (mod N).
  Eigen::Index exponent(Integer r) const;

 private:
  Modulus n_;
  Integer g_;
  std::vector<Integer> powers_;
  std::vector<Eigen::Index> logs_;
};

/// values[beta] belongs to the residue g^beta mod N.
struct GroupIndexedVector {
  Integer generator = 0;
  Integer modulus = 0;
  Eigen::VectorXd values;
};

/// a[delta] = f(<g^delta>).
template <typename F>
GroupIndexedVector group_vector(const GroupIndexing& group, F&& f) {
  GroupIndexedVector v{group.generator(), group.modulus().value(), Eigen::VectorXd(group.order())};
  for (Eigen::Index beta = 0; beta < group.order(); ++beta) v.values(beta) = f(group.residue(beta));
  return v;
}

/// b[gamma] = f(<g^-gamma>).
template <typename F>
GroupIndexedVector group_vector_inverse(const GroupIndexing& group, F&& f) {
  GroupIndexedVector v{group.generator(), group.modulus().value(), Eigen::VectorXd(group.order())};
  for (Eigen::Index gamma = 0; gamma < group.order(); ++gamma) v.values(gamma) = f(group.residue(-gamma));
  return v;
}

/// Mixture term of the optimal vertex modified rule with z = (1, z) for
/// every z in 1..N-1. Vector of length N indexed by z; entry 0 is NaN.
Eigen::VectorXd all_z_mixture(Modulus n, const ProductWeights& gamma);

/// Squared Korobov error (weights gamma/(2 pi)^2) of the lattice (1, z),
/// for every z. Entry 0 is NaN.
Eigen::VectorXd all_z_korobov(Modulus n, const ProductWeights& gamma);

struct SearchRow {
  Integer z = 0;
  double sq_total = 0.0;
  double sq_korobov = 0.0;
  double mixture = 0.0;
};

struct SearchResult {
  Integer N = 0;
  Integer z_best = 0;
  double sq_total = 0.0;
  double sq_korobov = 0.0;
  double mixture = 0.0;
  std::optional<std::vector<SearchRow>> all_rows;
};

/// Minimiser of the unanchored Sobolev error of Q* over z = (1, z);
/// ties go to the smaller z only when the values are bit-equal.
SearchResult best_generator(Modulus n, const ProductWeights& gamma, bool keep_rows = false);

std::vector<SearchResult> reproduce_table(const std::vector<Integer>& primes, const ProductWeights& gamma,
                                          unsigned jobs = 1, bool keep_rows = false);

struct FibonacciEvaluation {
  int k = 0;
  Integer N = 0;
  Integer z = 0;
  WceBreakdown breakdown;
  MixturePair halves;
  bool halves_equal = false;
};

/// Q* on the Fibonacci lattice (1, F_{k-1}) mod F_k through the O(N)
/// closed forms; N need not be prime.
FibonacciEvaluation fibonacci_rule(int k, const ProductWeights& gamma);

}  // namespace vmlattice
