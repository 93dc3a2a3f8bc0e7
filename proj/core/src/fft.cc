// core/src/fft.cc

// Copyright 2026  The CMLab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cmlab/fft.h"

#include <cmath>
#include <numbers>

#include "cmlab/error.h"

namespace cmlab {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>> *x, bool inverse) {
  auto &a = *x;
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw EmptyInput("fft size must be a nonzero power of two, got " +
                     std::to_string(n));

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                 (inverse ? 1.0 : -1.0);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    double inv_n = 1.0 / static_cast<double>(n);
    for (auto &c : a) c *= inv_n;
  }
}

std::vector<std::complex<double>> fft_real(const std::vector<double> &x,
                                           std::size_t fft_size) {
  std::vector<std::complex<double>> buf(fft_size, {0.0, 0.0});
  std::size_t m = x.size() < fft_size ? x.size() : fft_size;
  for (std::size_t i = 0; i < m; ++i) buf[i] = {x[i], 0.0};
  fft_inplace(&buf, false);
  return buf;
}

std::vector<double> ifft_real(const std::vector<std::complex<double>> &spec) {
  std::vector<std::complex<double>> buf(spec);
  fft_inplace(&buf, true);
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

}  // namespace cmlab
