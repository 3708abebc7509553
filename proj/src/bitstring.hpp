// Copyright 2026 The hwkc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hwk {

// Bitstrings of length n are packed into unsigned integers with the first
// character (the leftmost one in textual form) stored in the most significant
// of the low n bits.

inline constexpr int kMaxBits = 62;

inline int hamming_weight(uint64_t bits) { return std::popcount(bits); }

uint64_t bits_from_string(const std::string& s);
std::string bits_to_string(uint64_t bits, int n);

// Exact binomial coefficient; throws on invalid arguments or uint64 overflow.
uint64_t binomial(int n, int k);

// All length-n strings of Hamming weight k, in ascending integer order.
std::vector<uint64_t> weight_k_strings(int n, int k);

}  // namespace hwk
