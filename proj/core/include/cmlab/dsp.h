// core/include/cmlab/dsp.h

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

#ifndef CMLAB_DSP_H_
#define CMLAB_DSP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cmlab/audio_io.h"
#include "cmlab/rng.h"

namespace cmlab::dsp {

// The LFCC recipe. 20 ms frames, 10 ms hop, Hamming window, 20 linearly
// spaced triangular filters over [0, Nyquist], orthonormal DCT-II keeping
// coefficients 0..n_ceps-1, regression deltas with window 2. Filterbank
// energies are floored at log_floor before the log so silent frames stay
// finite.
struct LfccConfig {
  double frame_len_ms = 20.0;
  double hop_ms = 10.0;
  int n_filters = 20;
  int n_ceps = 20;
  double log_floor = 1e-10;
  int delta_window = 2;

  int frame_len_samples(int rate_hz) const {
    return static_cast<int>(frame_len_ms * rate_hz / 1000.0 + 0.5);
  }
  int hop_samples(int rate_hz) const {
    return static_cast<int>(hop_ms * rate_hz / 1000.0 + 0.5);
  }
  // Frame padded to the next power of two (512 at 16 kHz).
  std::size_t fft_size(int rate_hz) const;
};

// Row-major frames x dims matrix.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, 0.0) {}

  double &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  const double *row(std::size_t r) const { return data.data() + r * cols; }
  double *row(std::size_t r) { return data.data() + r * cols; }
};

// Hamming window of length n.
std::vector<double> hamming(std::size_t n);

// Splits w into overlapping windowed frames. Frame count is
// 1 + floor((len - frame_len) / hop); throws TooShort when w holds less than
// one frame.
std::vector<std::vector<double>> frame_signal(const audio::Waveform &w,
                                              const LfccConfig &cfg);

// Static LFCC: per frame, |FFT|^2 -> triangular linear filterbank ->
// log(max(energy, log_floor)) -> orthonormal DCT-II, coefficients
// 0..n_ceps-1.
FeatureMatrix lfcc(const audio::Waveform &w, const LfccConfig &cfg);

// Appends regression deltas and delta-deltas (edge frames replicated);
// output dims = 3 * input dims.
FeatureMatrix add_deltas(const FeatureMatrix &f, int delta_window = 2);

// lfcc followed by add_deltas; the 60-d network input.
FeatureMatrix lfcc_full(const audio::Waveform &w, const LfccConfig &cfg);

// Repeat-pads short inputs cyclically (row i = input row i mod rows) and
// random-crops long ones: rows [s, s+target) with s drawn uniformly on
// [0, rows-target]. Equal length passes through unchanged.
FeatureMatrix fix_length(const FeatureMatrix &f, std::size_t target, Rng *rng);

// Deterministic variant used at evaluation time: repeat-pad or center crop.
FeatureMatrix fix_length_center(const FeatureMatrix &f, std::size_t target);

// Triangular filterbank weights, one row per filter over fft_size/2+1 bins.
// Exposed so the diagnostics and tests can inspect the exact filters.
std::vector<std::vector<double>> linear_filterbank(int n_filters,
                                                   std::size_t fft_size,
                                                   int rate_hz);

// Feature cache: magic "LFCC", version u32, rows u32, cols u32, then
// row-major float32 little-endian. One file per trial.
void write_feature_file(const FeatureMatrix &f, const std::string &path);
FeatureMatrix read_feature_file(const std::string &path);

}  // namespace cmlab::dsp

#endif  // CMLAB_DSP_H_
