// core/include/cmlab/common.h

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

#ifndef CMLAB_COMMON_H_
#define CMLAB_COMMON_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cmlab {

// 64-bit FNV-1a. Used for stage fingerprints and seed derivation; not
// cryptographic.
std::uint64_t fnv1a64(const void *data, std::size_t len,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(std::string_view s,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

// SplitMix64 step; good enough to decorrelate derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Worker count for parallel_for. 0 restores the hardware default.
void set_num_threads(int n);
int num_threads();

// Runs fn(i) for i in [0, n). fn(i) must only touch state owned by index i;
// under that contract the result is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

// Streaming FNV-1a over a file's bytes. Throws IoError if unreadable.
std::uint64_t hash_file(const std::string &path);

std::string to_hex(std::uint64_t v);

}  // namespace cmlab

#endif  // CMLAB_COMMON_H_
