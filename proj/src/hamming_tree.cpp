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

#include "hamming_tree.hpp"

#include <sstream>

namespace hwk {

HammingTree::HammingTree(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxBits) fail(ErrorCode::InvalidArgument, "n must be in [1, " + std::to_string(kMaxBits) + "]");
  if (k < 0 || k > n) fail(ErrorCode::InvalidK, "k must be in [0, n]");
  uint64_t count = binomial(n, k);
  if (count > (1ull << 26)) fail(ErrorCode::InvalidArgument, "C(n,k) too large to materialize");
  nodes_.reserve(2 * count - 1);
  build(0, k);
}

int32_t HammingTree::build(int level, int ones) {
  int32_t idx = static_cast<int32_t>(nodes_.size());
  nodes_.push_back(TreeNode{level, ones, -1, -1});
  if (ones == 0 || ones == n_ - level) {
    ++leaves_;
    return idx;
  }
  int32_t left = build(level + 1, ones);
  int32_t right = build(level + 1, ones - 1);
  nodes_[static_cast<size_t>(idx)].left = left;
  nodes_[static_cast<size_t>(idx)].right = right;
  return idx;
}

void HammingTree::walk(int32_t idx, uint64_t suffix,
                       const std::function<void(int32_t, uint64_t)>& visit) const {
  visit(idx, suffix);
  const TreeNode& nd = node(idx);
  if (nd.is_leaf()) return;
  walk(nd.left, suffix, visit);
  walk(nd.right, suffix | (1ull << nd.level), visit);
}

void HammingTree::preorder(const std::function<void(int32_t, uint64_t)>& visit) const {
  walk(root(), 0, visit);
}

std::vector<std::string> HammingTree::leaves_preorder() const {
  std::vector<std::string> out;
  out.reserve(leaves_);
  preorder([&](int32_t idx, uint64_t suffix) {
    const TreeNode& nd = node(idx);
    if (nd.is_leaf()) out.push_back(bits_to_string(full_value(nd, suffix), n_));
  });
  return out;
}

std::string HammingTree::to_dot() const {
  std::ostringstream os;
  os << "digraph hamming_tree {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  preorder([&](int32_t idx, uint64_t suffix) {
    const TreeNode& nd = node(idx);
    os << "  n" << idx << " [label=\"" << bits_to_string(full_value(nd, suffix), n_) << "\\n(i=" << nd.level
       << ", l=" << nd.ones << ")\"];\n";
    if (!nd.is_leaf()) {
      os << "  n" << idx << " -> n" << nd.left << ";\n";
      os << "  n" << idx << " -> n" << nd.right << ";\n";
    }
  });
  os << "}\n";
  return os.str();
}

}  // namespace hwk
