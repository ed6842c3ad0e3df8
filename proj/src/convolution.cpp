#include "vmlattice/convolution.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "vmlattice/errors.hpp"
#include "vmlattice/summation.hpp"

namespace vmlattice {

namespace {

void require_same_length(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) throw LengthMismatch("cyclic convolution operands differ in length");
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Eigen::VectorXd cyclic_convolution_direct(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  require_same_length(a, b);
  const Eigen::Index n = a.size();
  Eigen::VectorXd c(n);
  for (Eigen::Index beta = 0; beta < n; ++beta) {
    CompensatedSum<double> sum;
    for (Eigen::Index g = 0; g < n; ++g) {
      Eigen::Index idx = beta - g;
      if (idx < 0) idx += n;
      sum += a(idx) * b(g);
    }
    c(beta) = sum.value();
  }
  return c;
}

void fft_radix2(Eigen::VectorXcd& data, bool inverse) {
  const Eigen::Index n = data.size();
  if (!is_power_of_two(n)) throw LengthMismatch("radix-2 FFT needs a power-of-two length");
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data(i), data(j));
  }
  // twiddles taken directly from cos/sin of the full-length angle table
  const double sign = inverse ? 1.0 : -1.0;
  Eigen::VectorXcd roots(n / 2 > 0 ? n / 2 : 1);
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    roots(k) = {std::cos(angle), sign * std::sin(angle)};
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const Eigen::Index half = len / 2;
    const Eigen::Index stride = n / len;
    for (Eigen::Index start = 0; start < n; start += len) {
      for (Eigen::Index k = 0; k < half; ++k) {
        const std::complex<double> t = roots(k * stride) * data(start + k + half);
        const std::complex<double> u = data(start + k);
        data(start + k) = u + t;
        data(start + k + half) = u - t;
      }
    }
  }
}

Eigen::VectorXd cyclic_convolution_fft(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  require_same_length(a, b);
  const Eigen::Index n = a.size();
  if (n == 0) return {};
  // linear convolution has length 2n - 1; fold it back onto n
  Eigen::Index size = 1;
  while (size < 2 * n - 1) size <<= 1;
  Eigen::VectorXcd fa = Eigen::VectorXcd::Zero(size);
  Eigen::VectorXcd fb = Eigen::VectorXcd::Zero(size);
  fa.head(n) = a.cast<std::complex<double>>();
  fb.head(n) = b.cast<std::complex<double>>();
  fft_radix2(fa, false);
  fft_radix2(fb, false);
  fa = fa.cwiseProduct(fb);
  fft_radix2(fa, true);
  const double scale = 1.0 / static_cast<double>(size);
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double wrapped = i + 1 < n ? fa(i + n).real() : 0.0;
    c(i) = (fa(i).real() + wrapped) * scale;
  }
  return c;
}

Eigen::VectorXd cyclic_convolution(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  require_same_length(a, b);
  if (a.size() <= kDirectConvolutionThreshold) return cyclic_convolution_direct(a, b);
  return cyclic_convolution_fft(a, b);
}

}  // namespace vmlattice
