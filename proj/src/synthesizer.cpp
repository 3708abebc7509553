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

#include "synthesizer.hpp"

#include <algorithm>
#include <cmath>

namespace hwk {

namespace {

double arg_or_zero(const cdouble& z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
  return std::arg(z);
}

double fill_weights(const HammingTree& tree, const StateSpec& spec, int32_t idx, uint64_t suffix,
                    std::vector<double>& weights) {
  const TreeNode& nd = tree.node(idx);
  double w;
  if (nd.is_leaf()) {
    w = std::norm(spec.amplitude(tree.full_value(nd, suffix)));
  } else {
    w = fill_weights(tree, spec, nd.left, suffix, weights) +
        fill_weights(tree, spec, nd.right, suffix | (1ull << nd.level), weights);
  }
  weights[static_cast<size_t>(idx)] = w;
  return w;
}

// Amplitude the node routes to one child: the unique leaf amplitude when the
// child's string is forced, sqrt of the child's subtree weight otherwise.
cdouble child_amplitude(const HammingTree& tree, const WeightTable& weights, const StateSpec& spec,
                        int32_t child, uint64_t child_suffix) {
  const TreeNode& nd = tree.node(child);
  if (nd.is_leaf()) return spec.amplitude(tree.full_value(nd, child_suffix));
  return std::sqrt(weights.at(child));
}

struct Emitter {
  const HammingTree& tree;
  const WeightTable& weights;
  const StateSpec& spec;
  const bool prune;
  QubitLayout lay;
  Circuit circuit;
  std::vector<NodeVisit>* trace;

  Emitter(const HammingTree& t, const WeightTable& w, const StateSpec& s, bool prune_zero,
          std::vector<NodeVisit>* tr)
      : tree(t), weights(w), spec(s), prune(prune_zero), lay(s.n()), circuit(lay), trace(tr) {}

  void emit(const Gate& g) { circuit.append(g); }

  void visit(int32_t idx, uint64_t suffix) {
    const TreeNode& nd = tree.node(idx);
    const int i = nd.level;
    const int n = lay.n;
    const int32_t control = i == 0 ? -1 : (i == 1 ? lay.q(n) : lay.a(n - i + 1));
    const int32_t target = lay.q(n - i);

    if (trace && i >= 1) trace->push_back({circuit.gates.size(), i, control, suffix});

    BranchParams bp = branch_params(tree, weights, spec, idx, suffix);

    // Rotation: split the node's basis state between the two child strings.
    // With pruning, a dead |0> branch whose surviving branch carries no phase
    // makes the rotation an exact identity.
    const bool zero_left = bp.amp0 == cdouble{0.0, 0.0};
    const bool rotation_identity = zero_left && arg_or_zero(bp.amp1) == 0.0;
    if (!(prune && rotation_identity)) {
      if (i == 0) {
        emit(Gate::u3(bp.theta, bp.phi, bp.lambda, target));
      } else {
        emit(Gate::cu3(control, bp.theta, bp.phi, bp.lambda, target));
      }
    }

    // Branch flip: move the target=0 component onto the left child's string
    // by flipping the last prefix zero.
    const int32_t flip = lay.q(n - i - nd.ones);
    if (!(prune && zero_left)) {
      emit(Gate::x(target));
      if (i == 0) {
        emit(Gate::cnot(target, flip));
      } else {
        emit(Gate::ccx(control, target, flip));
      }
      emit(Gate::x(target));
    }

    const TreeNode& left = tree.node(nd.left);
    const TreeNode& right = tree.node(nd.right);
    const uint64_t left_suffix = suffix;
    const uint64_t right_suffix = suffix | (1ull << i);
    const bool descend_left = !left.is_leaf() && !(prune && weights.at(nd.left) == 0.0);
    const bool descend_right = !right.is_leaf() && !(prune && weights.at(nd.right) == 0.0);

    if (descend_left) {
      if (i == 0) {
        // Level-1 nodes are controlled directly on q_n; make "suffix matches"
        // read as q_n = 1 for the 0-suffix branch.
        emit(Gate::x(target));
        visit(nd.left, left_suffix);
        emit(Gate::x(target));
      } else {
        emit(Gate::x(target));
        emit(Gate::ccx(control, target, lay.a(n - i)));
        visit(nd.left, left_suffix);
        emit(Gate::ccx(control, target, lay.a(n - i)));
        emit(Gate::x(target));
      }
    }
    if (descend_right) {
      if (i == 0) {
        visit(nd.right, right_suffix);
      } else {
        emit(Gate::ccx(control, target, lay.a(n - i)));
        visit(nd.right, right_suffix);
        emit(Gate::ccx(control, target, lay.a(n - i)));
      }
    }
  }
};

}  // namespace

WeightTable subtree_weights(const HammingTree& tree, const StateSpec& spec) {
  if (tree.n() != spec.n() || tree.k() != spec.k()) {
    fail(ErrorCode::SizeMismatch, "tree and spec disagree on (n, k)");
  }
  std::vector<double> weights(tree.size(), 0.0);
  fill_weights(tree, spec, tree.root(), 0, weights);
  return WeightTable(std::move(weights));
}

BranchParams branch_params(const HammingTree& tree, const WeightTable& weights, const StateSpec& spec,
                           int32_t node, uint64_t suffix) {
  const TreeNode& nd = tree.node(node);
  if (nd.is_leaf()) fail(ErrorCode::InvalidArgument, "branch_params requires an internal node");

  BranchParams bp;
  bp.amp0 = child_amplitude(tree, weights, spec, nd.left, suffix);
  bp.amp1 = child_amplitude(tree, weights, spec, nd.right, suffix | (1ull << nd.level));
  bp.norm = std::hypot(std::abs(bp.amp0), std::abs(bp.amp1));
  if (bp.norm == 0.0) {
    bp.theta = bp.phi = bp.lambda = 0.0;
    return bp;
  }
  bp.theta = 2.0 * std::acos(std::clamp(std::abs(bp.amp1) / bp.norm, 0.0, 1.0));
  bp.lambda = arg_or_zero(bp.amp0) + M_PI;
  bp.phi = arg_or_zero(bp.amp1) - arg_or_zero(bp.amp0) - M_PI;
  return bp;
}

Circuit synthesize(const StateSpec& spec, const SynthOptions& opts, std::vector<NodeVisit>* trace) {
  if (trace && (opts.peephole || opts.decompose_u3)) {
    fail(ErrorCode::InvalidArgument, "trace offsets refer to the raw gate stream; disable peephole/decompose");
  }

  HammingTree tree(spec.n(), spec.k());
  WeightTable weights = subtree_weights(tree, spec);
  Emitter emitter(tree, weights, spec, opts.prune_zero, trace);

  // |0^(n+m)> -> |0^(n-k) 1^k 0^m>
  for (int i = spec.n() - spec.k() + 1; i <= spec.n(); ++i) {
    emitter.emit(Gate::x(emitter.lay.q(i)));
  }

  if (!tree.node(tree.root()).is_leaf()) emitter.visit(tree.root(), 0);

  Circuit out = std::move(emitter.circuit);
  if (opts.peephole) out = peephole_cancel_x(out);
  if (opts.decompose_u3) out = decompose_rotations(out);
  return out;
}

GateCountCertificate gate_count_certificate(const StateSpec& spec) {
  Circuit circuit = synthesize(spec);
  HammingTree tree(spec.n(), spec.k());
  GateCountCertificate cert;
  cert.internal_nodes = tree.internal_count();
  cert.total_gates = circuit.gates.size();
  cert.bound = 10 * (tree.leaf_count() - 1) + static_cast<uint64_t>(spec.k());
  cert.ok = cert.total_gates <= cert.bound;
  return cert;
}

}  // namespace hwk
