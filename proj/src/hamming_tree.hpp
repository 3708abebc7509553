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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bitstring.hpp"
#include "errors.hpp"

namespace hwk {

// One node of the Hamming tree. A node at level i stands for the string
// 0^(n-i-ones) 1^ones b where b is the i-bit suffix fixed so far. The suffix
// is not stored per node; traversals reconstruct it from the root path (a
// left edge prepends 0, a right edge prepends 1).
struct TreeNode {
  int32_t level;
  int32_t ones;
  int32_t left = -1;
  int32_t right = -1;

  bool is_leaf() const { return left < 0; }
};

// Binary tree whose leaves enumerate all length-n strings of Hamming weight
// k, stored as a flat vector in preorder. A node is a leaf exactly when its
// string is forced (ones == 0 or ones == n - level); every other node has
// two children: left keeps `ones` and extends the suffix with 0, right drops
// `ones` by one and extends with 1 (its full string equals the parent's).
// Immutable after construction.
class HammingTree {
 public:
  HammingTree(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int32_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode& node(int32_t idx) const { return nodes_[static_cast<size_t>(idx)]; }
  uint64_t leaf_count() const { return leaves_; }
  uint64_t internal_count() const { return nodes_.size() - leaves_; }

  // Packed full string of a node given its reconstructed suffix bits.
  uint64_t full_value(const TreeNode& nd, uint64_t suffix) const {
    uint64_t prefix_ones = nd.ones == 0 ? 0 : ((1ull << nd.ones) - 1) << nd.level;
    return prefix_ones | suffix;
  }

  // Preorder walk (node, then left subtree, then right subtree). The visitor
  // receives the node index and the node's suffix bits.
  void preorder(const std::function<void(int32_t, uint64_t)>& visit) const;

  // Full strings of the leaves in preorder; as a set these are exactly the
  // weight-k strings of length n.
  std::vector<std::string> leaves_preorder() const;

  // Graphviz rendering, one node statement per tree node labeled with the
  // full string and (i, l).
  std::string to_dot() const;

 private:
  int n_;
  int k_;
  uint64_t leaves_ = 0;
  std::vector<TreeNode> nodes_;

  int32_t build(int level, int ones);
  void walk(int32_t idx, uint64_t suffix, const std::function<void(int32_t, uint64_t)>& visit) const;
};

}  // namespace hwk
