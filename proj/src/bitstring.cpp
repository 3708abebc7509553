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

#include "bitstring.hpp"

#include "errors.hpp"

namespace hwk {

uint64_t bits_from_string(const std::string& s) {
  if (s.size() > kMaxBits) fail(ErrorCode::WrongLength, "bitstring longer than " + std::to_string(kMaxBits));
  uint64_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') fail(ErrorCode::WrongLength, "non-binary character in bitstring '" + s + "'");
    bits = (bits << 1) | static_cast<uint64_t>(c - '0');
  }
  return bits;
}

std::string bits_to_string(uint64_t bits, int n) {
  if (n < 0 || n > kMaxBits) fail(ErrorCode::WrongLength, "bitstring length out of range");
  std::string s(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1u) s[static_cast<size_t>(i)] = '1';
  }
  return s;
}

uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::InvalidK, "binomial requires 0 <= k <= n");
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) fail(ErrorCode::InvalidArgument, "binomial overflows uint64");
  }
  return static_cast<uint64_t>(r);
}

std::vector<uint64_t> weight_k_strings(int n, int k) {
  if (n < 1 || n > kMaxBits) fail(ErrorCode::InvalidArgument, "string length out of range");
  if (k < 0 || k > n) fail(ErrorCode::InvalidK, "weight must satisfy 0 <= k <= n");
  std::vector<uint64_t> out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const uint64_t limit = 1ull << n;
  uint64_t v = (1ull << k) - 1;
  while (v < limit) {
    out.push_back(v);
    // Gosper's hack: next integer with the same popcount.
    uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace hwk
