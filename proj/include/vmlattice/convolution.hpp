#pragma once

#include <Eigen/Dense>

namespace vmlattice {

/// Lengths up to this use the direct sum in cyclic_convolution.
inline constexpr Eigen::Index kDirectConvolutionThreshold = 64;

/// c[b] = sum_g a[(b - g) mod L] b[g], straight O(L^2).
Eigen::VectorXd cyclic_convolution_direct(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Same result through a zero-padded power-of-two FFT; any length L >= 1.
Eigen::VectorXd cyclic_convolution_fft(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Direct below the threshold, FFT above it.
Eigen::VectorXd cyclic_convolution(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// In-place radix-2 transform; size must be a power of two. The inverse is
/// unnormalised.
void fft_radix2(Eigen::VectorXcd& data, bool inverse);

}  // namespace vmlattice
