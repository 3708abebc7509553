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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hamming_tree.hpp"

using hwk::bits_to_string;
using hwk::binomial;
using hwk::Error;
using hwk::ErrorCode;
using hwk::HammingTree;
using hwk::TreeNode;
using hwk::weight_k_strings;

TEST_CASE("bitstring helpers") {
  CHECK(hwk::bits_from_string("0011") == 3);
  CHECK(bits_to_string(3, 4) == "0011");
  CHECK(hwk::hamming_weight(0b1011) == 3);
  CHECK_THROWS_AS(hwk::bits_from_string("01x"), Error);

  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(62, 31) > 0);
  CHECK_THROWS_AS(binomial(3, 4), Error);

  auto strings = weight_k_strings(4, 2);
  CHECK(strings.size() == 6);
  CHECK(std::is_sorted(strings.begin(), strings.end()));
}

TEST_CASE("tree fixture for n=4, k=2") {
  HammingTree tree(4, 2);
  const TreeNode& root = tree.node(tree.root());
  CHECK(bits_to_string(tree.full_value(root, 0), 4) == "0011");
  CHECK(root.level == 0);
  CHECK(root.ones == 2);

  // left child: level 1, ones 2, suffix "0"; right child: same string as the
  // root re-read one level deeper.
  const TreeNode& left = tree.node(root.left);
  const TreeNode& right = tree.node(root.right);
  CHECK(bits_to_string(tree.full_value(left, 0), 4) == "0110");
  CHECK(bits_to_string(tree.full_value(right, 1), 4) == "0011");
  CHECK(left.ones == 2);
  CHECK(right.ones == 1);

  CHECK(tree.leaf_count() == 6);
  CHECK(tree.internal_count() == 5);
  CHECK(tree.leaves_preorder() ==
        std::vector<std::string>{"1100", "1010", "0110", "1001", "0101", "0011"});
}

TEST_CASE("small trees") {
  HammingTree t21(2, 1);
  CHECK(bits_to_string(t21.full_value(t21.node(0), 0), 2) == "01");
  CHECK(t21.leaves_preorder() == std::vector<std::string>{"10", "01"});
  CHECK(t21.leaf_count() == 2);
  CHECK(t21.internal_count() == 1);

  HammingTree t50(5, 0);
  CHECK(t50.size() == 1);
  CHECK(t50.node(0).is_leaf());
  CHECK(t50.leaves_preorder() == std::vector<std::string>{"00000"});

  HammingTree t33(3, 3);
  CHECK(t33.leaves_preorder() == std::vector<std::string>{"111"});

  HammingTree t11(1, 1);
  CHECK(t11.size() == 1);

  CHECK_THROWS_AS(HammingTree(3, -1), Error);
  CHECK_THROWS_AS(HammingTree(3, 4), Error);
}

TEST_CASE("leaves enumerate all weight-k strings for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      HammingTree tree(n, k);
      CHECK(tree.leaf_count() == binomial(n, k));
      CHECK(tree.internal_count() == binomial(n, k) - 1);

      std::set<uint64_t> seen;
      tree.preorder([&](int32_t idx, uint64_t suffix) {
        const TreeNode& nd = tree.node(idx);
        if (nd.is_leaf()) seen.insert(tree.full_value(nd, suffix));
      });
      auto all = weight_k_strings(n, k);
      CHECK(seen == std::set<uint64_t>(all.begin(), all.end()));
    }
  }
}

TEST_CASE("structural invariants hold on every node") {
  for (auto [n, k] : {std::pair{6, 3}, std::pair{7, 2}, std::pair{8, 5}}) {
    HammingTree tree(n, k);
    int max_internal_level = 0;
    tree.preorder([&](int32_t idx, uint64_t suffix) {
      const TreeNode& nd = tree.node(idx);
      // ones + HW(suffix) = k, with ones inside its feasible window
      CHECK(nd.ones + hwk::hamming_weight(suffix) == k);
      CHECK(nd.ones >= std::max(0, k - nd.level));
      CHECK(nd.ones <= std::min(n - nd.level, k));
      CHECK(hwk::hamming_weight(tree.full_value(nd, suffix)) == k);
      CHECK(nd.is_leaf() == (nd.ones == 0 || nd.ones == n - nd.level));
      if (!nd.is_leaf()) {
        max_internal_level = std::max(max_internal_level, nd.level);
        // right child's full string equals the parent's, left child extends
        // the suffix with a 0 after flipping the last prefix zero
        const TreeNode& left = tree.node(nd.left);
        const TreeNode& right = tree.node(nd.right);
        uint64_t right_suffix = suffix | (1ull << nd.level);
        CHECK(tree.full_value(right, right_suffix) == tree.full_value(nd, suffix));
        uint64_t left_full = tree.full_value(left, suffix);
        uint64_t low_mask = (1ull << (nd.level + 1)) - 1;
        CHECK((left_full & low_mask) == suffix);  // ends with "0" + suffix
      }
    });
    CHECK(max_internal_level <= n - 2);
  }
}

TEST_CASE("dot export") {
  auto count_labels = [](const std::string& dot) {
    size_t count = 0;
    for (size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) {
      ++count;
    }
    return count;
  };
  CHECK(count_labels(HammingTree(2, 1).to_dot()) == 3);
  CHECK(count_labels(HammingTree(4, 2).to_dot()) == 11);
  CHECK(count_labels(HammingTree(1, 1).to_dot()) == 1);
  CHECK(HammingTree(4, 2).to_dot().find("digraph") == 0);
}
