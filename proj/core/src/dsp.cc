// core/src/dsp.cc

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

#include "cmlab/dsp.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "cmlab/error.h"
#include "cmlab/fft.h"

namespace cmlab::dsp {

std::size_t LfccConfig::fft_size(int rate_hz) const {
  return next_pow2(static_cast<std::size_t>(frame_len_samples(rate_hz)));
}

std::vector<double> hamming(std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (n == 1) return w;
  for (std::size_t i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi *
                                  static_cast<double>(i) /
                                  static_cast<double>(n - 1));
  return w;
}

std::vector<std::vector<double>> frame_signal(const audio::Waveform &w,
                                              const LfccConfig &cfg) {
  const int frame_len = cfg.frame_len_samples(w.sample_rate_hz);
  const int hop = cfg.hop_samples(w.sample_rate_hz);
  const std::size_t n = w.samples.size();
  if (n < static_cast<std::size_t>(frame_len))
    throw TooShort("signal of " + std::to_string(n) +
                   " samples is shorter than one frame (" +
                   std::to_string(frame_len) + ")");

  const std::size_t count = 1 + (n - frame_len) / hop;
  const std::vector<double> win = hamming(frame_len);
  std::vector<std::vector<double>> frames(count);
  for (std::size_t f = 0; f < count; ++f) {
    frames[f].resize(frame_len);
    const double *src = w.samples.data() + f * hop;
    for (int i = 0; i < frame_len; ++i) frames[f][i] = src[i] * win[i];
  }
  return frames;
}

std::vector<std::vector<double>> linear_filterbank(int n_filters,
                                                   std::size_t fft_size,
                                                   int rate_hz) {
  const std::size_t n_bins = fft_size / 2 + 1;
  const double nyquist = rate_hz / 2.0;
  const double bin_hz = static_cast<double>(rate_hz) / fft_size;

  // n_filters+2 edge frequencies linearly spaced over [0, Nyquist].
  std::vector<double> edges(n_filters + 2);
  for (int i = 0; i < n_filters + 2; ++i)
    edges[i] = nyquist * i / (n_filters + 1);

  std::vector<std::vector<double>> fb(n_filters,
                                      std::vector<double>(n_bins, 0.0));
  for (int j = 0; j < n_filters; ++j) {
    const double lo = edges[j], mid = edges[j + 1], hi = edges[j + 2];
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      if (f > lo && f < mid) {
        fb[j][k] = (f - lo) / (mid - lo);
      } else if (f == mid) {
        fb[j][k] = 1.0;
      } else if (f > mid && f < hi) {
        fb[j][k] = (hi - f) / (hi - mid);
      }
    }
  }
  return fb;
}

namespace {

// Orthonormal DCT-II basis: basis[i][j] = s_i * cos(pi*i*(2j+1)/(2M)).
std::vector<std::vector<double>> dct2_basis(int n_out, int n_in) {
  std::vector<std::vector<double>> b(n_out, std::vector<double>(n_in));
  const double s0 = std::sqrt(1.0 / n_in);
  const double s = std::sqrt(2.0 / n_in);
  for (int i = 0; i < n_out; ++i)
    for (int j = 0; j < n_in; ++j)
      b[i][j] = (i == 0 ? s0 : s) *
                std::cos(std::numbers::pi * i * (2.0 * j + 1.0) / (2.0 * n_in));
  return b;
}

}  // namespace

FeatureMatrix lfcc(const audio::Waveform &w, const LfccConfig &cfg) {
  const auto frames = frame_signal(w, cfg);
  const std::size_t fft_size = cfg.fft_size(w.sample_rate_hz);
  const std::size_t n_bins = fft_size / 2 + 1;
  const auto fb = linear_filterbank(cfg.n_filters, fft_size, w.sample_rate_hz);
  const auto dct = dct2_basis(cfg.n_ceps, cfg.n_filters);

  FeatureMatrix out(frames.size(), cfg.n_ceps);
  std::vector<double> logen(cfg.n_filters);
  for (std::size_t t = 0; t < frames.size(); ++t) {
    auto spec = fft_real(frames[t], fft_size);
    // One-sided power spectrum.
    std::vector<double> power(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k) power[k] = std::norm(spec[k]);

    for (int j = 0; j < cfg.n_filters; ++j) {
      double e = 0.0;
      const auto &wgt = fb[j];
      for (std::size_t k = 0; k < n_bins; ++k) e += wgt[k] * power[k];
      logen[j] = std::log(std::max(e, cfg.log_floor));
    }
    for (int i = 0; i < cfg.n_ceps; ++i) {
      double c = 0.0;
      for (int j = 0; j < cfg.n_filters; ++j) c += dct[i][j] * logen[j];
      out.at(t, i) = c;
    }
  }
  return out;
}

FeatureMatrix add_deltas(const FeatureMatrix &f, int delta_window) {
  if (f.rows == 0) throw TooShort("add_deltas needs at least one frame");
  const int W = delta_window;
  double denom = 0.0;
  for (int n = 1; n <= W; ++n) denom += 2.0 * n * n;

  auto delta_of = [&](const FeatureMatrix &src) {
    FeatureMatrix d(src.rows, src.cols);
    const auto last = static_cast<std::ptrdiff_t>(src.rows) - 1;
    for (std::ptrdiff_t t = 0; t <= last; ++t) {
      for (std::size_t c = 0; c < src.cols; ++c) {
        double acc = 0.0;
        for (int n = 1; n <= W; ++n) {
          std::ptrdiff_t hi = std::min<std::ptrdiff_t>(t + n, last);
          std::ptrdiff_t lo = std::max<std::ptrdiff_t>(t - n, 0);
          acc += n * (src.at(hi, c) - src.at(lo, c));
        }
        d.at(t, c) = acc / denom;
      }
    }
    return d;
  };

  FeatureMatrix d1 = delta_of(f);
  FeatureMatrix d2 = delta_of(d1);
  FeatureMatrix out(f.rows, f.cols * 3);
  for (std::size_t t = 0; t < f.rows; ++t) {
    std::memcpy(out.row(t), f.row(t), f.cols * sizeof(double));
    std::memcpy(out.row(t) + f.cols, d1.row(t), f.cols * sizeof(double));
    std::memcpy(out.row(t) + 2 * f.cols, d2.row(t), f.cols * sizeof(double));
  }
  return out;
}

FeatureMatrix lfcc_full(const audio::Waveform &w, const LfccConfig &cfg) {
  return add_deltas(lfcc(w, cfg), cfg.delta_window);
}

FeatureMatrix fix_length(const FeatureMatrix &f, std::size_t target,
                         Rng *rng) {
  if (f.rows == 0) throw TooShort("fix_length needs at least one frame");
  if (target == 0) throw TooShort("fix_length target must be >= 1");
  if (f.rows == target) return f;

  FeatureMatrix out(target, f.cols);
  if (f.rows < target) {
    for (std::size_t t = 0; t < target; ++t)
      std::memcpy(out.row(t), f.row(t % f.rows), f.cols * sizeof(double));
    return out;
  }
  const std::size_t max_start = f.rows - target;
  const std::size_t s =
      rng ? static_cast<std::size_t>(rng->uniform_int(max_start + 1)) : 0;
  for (std::size_t t = 0; t < target; ++t)
    std::memcpy(out.row(t), f.row(s + t), f.cols * sizeof(double));
  return out;
}

FeatureMatrix fix_length_center(const FeatureMatrix &f, std::size_t target) {
  if (f.rows == 0) throw TooShort("fix_length needs at least one frame");
  if (f.rows <= target) return fix_length(f, target, nullptr);
  const std::size_t s = (f.rows - target) / 2;
  FeatureMatrix out(target, f.cols);
  for (std::size_t t = 0; t < target; ++t)
    std::memcpy(out.row(t), f.row(s + t), f.cols * sizeof(double));
  return out;
}

namespace {

void put_u32(std::uint32_t v, std::ofstream *out) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out->write(reinterpret_cast<char *>(b), 4);
}

std::uint32_t get_u32(std::ifstream *in, const std::string &path) {
  unsigned char b[4];
  in->read(reinterpret_cast<char *>(b), 4);
  if (!*in) throw IoError("truncated feature file: " + path);
  return static_cast<std::uint32_t>(b[0]) | (b[1] << 8) | (b[2] << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_feature_file(const FeatureMatrix &f, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write("LFCC", 4);
  put_u32(1, &out);
  put_u32(static_cast<std::uint32_t>(f.rows), &out);
  put_u32(static_cast<std::uint32_t>(f.cols), &out);
  std::vector<float> row(f.cols);
  for (std::size_t t = 0; t < f.rows; ++t) {
    for (std::size_t c = 0; c < f.cols; ++c)
      row[c] = static_cast<float>(f.at(t, c));
    out.write(reinterpret_cast<const char *>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(float)));
  }
  if (!out) throw IoError("short write: " + path);
}

FeatureMatrix read_feature_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open feature file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "LFCC", 4) != 0)
    throw IoError("bad magic in feature file: " + path);
  std::uint32_t version = get_u32(&in, path);
  if (version != 1)
    throw IoError("unsupported feature file version " +
                  std::to_string(version) + ": " + path);
  std::uint32_t rows = get_u32(&in, path);
  std::uint32_t cols = get_u32(&in, path);
  FeatureMatrix f(rows, cols);
  std::vector<float> row(cols);
  for (std::uint32_t t = 0; t < rows; ++t) {
    in.read(reinterpret_cast<char *>(row.data()),
            static_cast<std::streamsize>(cols * sizeof(float)));
    if (!in) throw IoError("truncated feature file: " + path);
    for (std::uint32_t c = 0; c < cols; ++c) f.at(t, c) = row[c];
  }
  return f;
}

}  // namespace cmlab::dsp
