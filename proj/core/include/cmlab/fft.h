// core/include/cmlab/fft.h

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

#ifndef CMLAB_FFT_H_
#define CMLAB_FFT_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace cmlab {

// In-place iterative radix-2 FFT. x.size() must be a power of two.
void fft_inplace(std::vector<std::complex<double>> *x, bool inverse = false);

// Forward FFT of a real signal zero-padded to fft_size (power of two).
// Returns the full complex spectrum of length fft_size.
std::vector<std::complex<double>> fft_real(const std::vector<double> &x,
                                           std::size_t fft_size);

// Inverse FFT returning the real part (input assumed Hermitian-symmetric).
std::vector<double> ifft_real(const std::vector<std::complex<double>> &spec);

std::size_t next_pow2(std::size_t n);

}  // namespace cmlab

#endif  // CMLAB_FFT_H_
