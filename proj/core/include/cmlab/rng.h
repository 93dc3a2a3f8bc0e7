// core/include/cmlab/rng.h

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

#ifndef CMLAB_RNG_H_
#define CMLAB_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace cmlab {

// Seeded generator with platform-independent draw functions. The std::
// distributions are implementation-defined, so uniform/normal are spelled out
// here; every seeded contract in the library goes through this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, n); n > 0. Rejection-free modulo of a 64-bit draw
  // is biased by < 2^-53 for the n used here, but we reject to keep the
  // contract exact.
  std::uint64_t uniform_int(std::uint64_t n);

  // Inclusive range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Box-Muller; consumes two uniforms per pair, caches the spare.
  double normal(double mean = 0.0, double stddev = 1.0);

  // Derived stream, decorrelated from the parent by name. Children with the
  // same (seed, name) are identical; drawing from one does not advance the
  // other.
  Rng child(std::string_view name) const;
  Rng child(std::string_view name, std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cmlab

#endif  // CMLAB_RNG_H_
