// core/src/rng.cc

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

#include "cmlab/rng.h"

#include <cmath>
#include <numbers>

#include "cmlab/common.h"

namespace cmlab {

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  // Rejection sampling over the largest multiple of n below 2^64.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = bits();
  } while (x >= limit);
  return x % n;
}

double Rng::normal(double mean, double stddev) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + stddev * spare_;
  }
  // Box-Muller on (0,1] uniforms so log() stays finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return mean + stddev * r * std::cos(a);
}

Rng Rng::child(std::string_view name) const {
  return Rng(splitmix64(seed_ ^ fnv1a64(name)));
}

Rng Rng::child(std::string_view name, std::uint64_t index) const {
  return Rng(splitmix64(splitmix64(seed_ ^ fnv1a64(name)) + index));
}

}  // namespace cmlab
