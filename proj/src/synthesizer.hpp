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

#include <complex>
#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "hamming_tree.hpp"
#include "state_spec.hpp"

namespace hwk {

// Squared amplitude mass of every subtree, indexed like the tree's nodes:
// a leaf holds |amplitude of its string|^2, an internal node the sum of its
// children. Built in one post-order pass, O(C(n,k)) total.
class WeightTable {
 public:
  explicit WeightTable(std::vector<double> weights) : weights_(std::move(weights)) {}

  double at(int32_t node) const { return weights_[static_cast<size_t>(node)]; }
  double root_weight() const { return weights_.empty() ? 0.0 : weights_[0]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

WeightTable subtree_weights(const HammingTree& tree, const StateSpec& spec);

// Rotation data for one internal node. The defining contract is
//
//   U3(theta, phi, lambda) |1> = (amp0 |0> + amp1 |1>) / norm
//
// where amp0/amp1 are taken from the children: the actual (complex) leaf
// amplitude when the child is a leaf, sqrt of the child's subtree weight
// otherwise. The closed form realizing the contract is
//
//   theta  = 2 acos(|amp1| / norm)
//   lambda = arg(amp0) + pi
//   phi    = arg(amp1) - arg(amp0) - pi
//
// with arg(0) taken as 0, and all three angles 0 when norm == 0.
struct BranchParams {
  cdouble amp0;
  cdouble amp1;
  double theta;
  double phi;
  double lambda;
  double norm;
};

BranchParams branch_params(const HammingTree& tree, const WeightTable& weights, const StateSpec& spec,
                           int32_t node, uint64_t suffix);

struct SynthOptions {
  bool peephole = false;      // cancel adjacent X pairs after emission
  bool prune_zero = false;    // skip zero-weight subtrees and their gates
  bool decompose_u3 = false;  // rewrite U3/CU3 into Rz/Ry rotations
};

// One record per internal node visited at level >= 1, taken at recursion
// entry (before the node's first gate, at offset `gate_offset` in the raw
// gate stream): every populated basis state with the control wire set has
// its working-register suffix equal to `suffix`.
struct NodeVisit {
  std::size_t gate_offset;
  int32_t level;
  int32_t control;
  uint64_t suffix;
};

// Builds the preparation circuit: |0^(n+m)> evolves to the target state
// tensored with |0^m>, amplitude- and phase-exact. Trace collection requires
// the raw gate stream (peephole and decompose off).
Circuit synthesize(const StateSpec& spec, const SynthOptions& opts = {},
                   std::vector<NodeVisit>* trace = nullptr);

// Size accounting for the default (unoptimized) circuit: at most 10 gates
// per internal node plus the k initialization X gates.
struct GateCountCertificate {
  uint64_t internal_nodes;
  uint64_t total_gates;
  uint64_t bound;  // 10*(C(n,k)-1) + k
  bool ok;
};

GateCountCertificate gate_count_certificate(const StateSpec& spec);

}  // namespace hwk
