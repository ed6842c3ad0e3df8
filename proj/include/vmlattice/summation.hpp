#pragma once

#include <cmath>

namespace vmlattice {

/// Neumaier's variant of Kahan summation. The running error term also
/// captures the case where the addend is larger than the partial sum.
template <typename Scalar>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Scalar initial) : sum_(initial) {}

  constexpr CompensatedSum& operator+=(Scalar value) {
    const Scalar t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr CompensatedSum& operator-=(Scalar value) { return *this += -value; }

  constexpr Scalar value() const { return sum_ + compensation_; }
  constexpr explicit operator Scalar() const { return value(); }

 private:
  Scalar sum_{0};
  Scalar compensation_{0};
};

}  // namespace vmlattice
