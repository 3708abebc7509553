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

#include <chrono>
#include <cmath>

#include "doctest.h"
#include "hamming_tree.hpp"
#include "state_spec.hpp"
#include "statevector.hpp"
#include "synthesizer.hpp"

using hwk::BranchParams;
using hwk::cdouble;
using hwk::Circuit;
using hwk::Gate;
using hwk::GateKind;
using hwk::HammingTree;
using hwk::StateSpec;
using hwk::SynthOptions;
using hwk::WeightTable;

namespace {

std::vector<GateKind> kinds_of(const Circuit& c) {
  std::vector<GateKind> out;
  for (const Gate& g : c.gates) out.push_back(g.kind);
  return out;
}

double max_state_diff(const hwk::StateVector& a, const hwk::StateVector& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (uint64_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.amplitude(i) - b.amplitude(i)));
  return m;
}

}  // namespace

TEST_CASE("subtree weights match the direct-summation oracle") {
  StateSpec d42 = StateSpec::dicke(4, 2);
  HammingTree tree(4, 2);
  WeightTable weights = hwk::subtree_weights(tree, d42);
  CHECK(weights.root_weight() == doctest::Approx(1.0).epsilon(1e-14));
  int32_t right = tree.node(tree.root()).right;  // suffix "1"
  CHECK(weights.at(right) == doctest::Approx(0.5).epsilon(1e-14));

  // cross-check every node against the state-model reference
  for (auto [n, k, seed] : {std::tuple{6, 3, 1ull}, std::tuple{5, 2, 2ull}, std::tuple{7, 4, 3ull}}) {
    StateSpec spec = StateSpec::random(n, k, seed);
    HammingTree t(n, k);
    WeightTable w = hwk::subtree_weights(t, spec);
    t.preorder([&](int32_t idx, uint64_t suffix) {
      const hwk::TreeNode& nd = t.node(idx);
      double expected = nd.is_leaf() ? std::norm(spec.amplitude(t.full_value(nd, suffix)))
                                     : spec.suffix_weight(suffix, nd.level);
      CHECK(w.at(idx) == doctest::Approx(expected).epsilon(1e-12));
    });
  }
}

TEST_CASE("subtree weights of a single-support spec") {
  StateSpec spec(4, 2, {{0b0011, {1, 0}}});
  HammingTree tree(4, 2);
  WeightTable weights = hwk::subtree_weights(tree, spec);
  tree.preorder([&](int32_t idx, uint64_t suffix) {
    const hwk::TreeNode& nd = tree.node(idx);
    if (nd.is_leaf()) {
      double expected = tree.full_value(nd, suffix) == 0b0011 ? 1.0 : 0.0;
      CHECK(weights.at(idx) == expected);
    }
  });

  StateSpec d21 = StateSpec::dicke(2, 1);
  HammingTree t21(2, 1);
  WeightTable w21 = hwk::subtree_weights(t21, d21);
  CHECK(w21.at(t21.node(0).left) == doctest::Approx(0.5));
  CHECK(w21.at(t21.node(0).right) == doctest::Approx(0.5));
}

TEST_CASE("subtree weights reject mismatched inputs") {
  HammingTree tree(4, 2);
  StateSpec spec = StateSpec::dicke(4, 1);
  CHECK_THROWS_AS(hwk::subtree_weights(tree, spec), hwk::Error);
}

TEST_CASE("branch params satisfy the U3 contract") {
  auto check_contract = [](const BranchParams& bp) {
    if (bp.norm == 0.0) return;
    hwk::Mat2 m = hwk::u3_matrix(bp.theta, bp.phi, bp.lambda);
    // U3 |1> = second column = (amp0, amp1) / norm
    CHECK(std::abs(m[0][1] - bp.amp0 / bp.norm) <= 1e-12);
    CHECK(std::abs(m[1][1] - bp.amp1 / bp.norm) <= 1e-12);
  };

  // real symmetric split at the root of dicke(2,1)
  {
    StateSpec spec = StateSpec::dicke(2, 1);
    HammingTree tree(2, 1);
    WeightTable w = hwk::subtree_weights(tree, spec);
    BranchParams bp = hwk::branch_params(tree, w, spec, tree.root(), 0);
    CHECK(bp.theta == doctest::Approx(M_PI_2).epsilon(1e-14));
    check_contract(bp);
  }

  // no-split branch: all mass on the right child
  {
    StateSpec spec(2, 1, {{0b01, {1, 0}}});
    HammingTree tree(2, 1);
    WeightTable w = hwk::subtree_weights(tree, spec);
    BranchParams bp = hwk::branch_params(tree, w, spec, tree.root(), 0);
    CHECK(bp.theta == 0.0);
    check_contract(bp);
  }

  // complex phases: amp0 = i/sqrt(2), amp1 = 1/sqrt(2)
  {
    double r = 1.0 / std::sqrt(2.0);
    StateSpec spec(2, 1, {{0b10, {0, r}}, {0b01, {r, 0}}});
    HammingTree tree(2, 1);
    WeightTable w = hwk::subtree_weights(tree, spec);
    BranchParams bp = hwk::branch_params(tree, w, spec, tree.root(), 0);
    CHECK(bp.amp0 == cdouble{0, r});
    check_contract(bp);
  }

  // every internal node of seeded random specs
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    StateSpec spec = StateSpec::random(6, 3, seed);
    HammingTree tree(6, 3);
    WeightTable w = hwk::subtree_weights(tree, spec);
    tree.preorder([&](int32_t idx, uint64_t suffix) {
      if (tree.node(idx).is_leaf()) return;
      BranchParams bp = hwk::branch_params(tree, w, spec, idx, suffix);
      check_contract(bp);
      const hwk::TreeNode& left = tree.node(tree.node(idx).left);
      const hwk::TreeNode& right = tree.node(tree.node(idx).right);
      if (!left.is_leaf() && !right.is_leaf()) {
        CHECK(bp.amp0.imag() == 0.0);
        CHECK(bp.amp1.imag() == 0.0);
        CHECK(bp.amp0.real() >= 0.0);
        CHECK(bp.amp1.real() >= 0.0);
      }
    });
  }
}

TEST_CASE("n=2 k=1 emits the five-gate circuit") {
  StateSpec spec = StateSpec::dicke(2, 1);
  Circuit c = hwk::synthesize(spec);
  CHECK(c.layout.total() == 2);
  CHECK(kinds_of(c) ==
        std::vector<GateKind>{GateKind::X, GateKind::U3, GateKind::X, GateKind::CNOT, GateKind::X});

  hwk::StateVector state = hwk::run(c);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(state.amplitude(0b01) - cdouble{r, 0}) <= 1e-14);
  CHECK(std::abs(state.amplitude(0b10) - cdouble{r, 0}) <= 1e-14);
}

TEST_CASE("n=3 k=1 matches the eleven-gate shape with no ancillas") {
  StateSpec spec = StateSpec::random(3, 1, 4);
  Circuit c = hwk::synthesize(spec);
  CHECK(c.layout.total() == 3);  // m = 0
  CHECK(kinds_of(c) == std::vector<GateKind>{GateKind::X, GateKind::U3, GateKind::X, GateKind::CNOT,
                                             GateKind::X, GateKind::X, GateKind::CU3, GateKind::X,
                                             GateKind::CCX, GateKind::X, GateKind::X});
  hwk::VerifyReport report = hwk::compare_to_spec(hwk::run(c), spec);
  CHECK(report.max_amp_error <= 1e-10);
  CHECK(report.pass);
}

TEST_CASE("degenerate instances emit only initialization gates") {
  for (auto [n, k] : {std::pair{4, 0}, std::pair{4, 4}, std::pair{1, 1}, std::pair{1, 0}}) {
    StateSpec spec = StateSpec::dicke(n, k);
    Circuit c = hwk::synthesize(spec);
    CHECK(c.gates.size() == static_cast<size_t>(k));
    for (const Gate& g : c.gates) CHECK(g.kind == GateKind::X);
    hwk::VerifyReport report = hwk::compare_to_spec(hwk::run(c), spec);
    CHECK(report.max_amp_error == 0.0);
  }
}

TEST_CASE("synthesis is amplitude- and phase-exact on small sweeps") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (uint64_t seed = 1; seed <= 2; ++seed) {
        StateSpec spec = StateSpec::random(n, k, seed * 17 + static_cast<uint64_t>(n * 13 + k));
        hwk::VerifyReport report = hwk::compare_to_spec(hwk::run(hwk::synthesize(spec)), spec);
        CHECK(report.fidelity >= 1.0 - 1e-9);
        CHECK(report.max_amp_error <= 1e-10);
        CHECK(report.ancilla_residual <= 1e-12);
      }
    }
  }
}

TEST_CASE("zero-amplitude support is handled with pruning off and on") {
  StateSpec point(4, 2, {{0b0011, {1, 0}}});
  for (bool prune : {false, true}) {
    SynthOptions opts;
    opts.prune_zero = prune;
    hwk::VerifyReport report = hwk::compare_to_spec(hwk::run(hwk::synthesize(point, opts)), point);
    CHECK(report.max_amp_error <= 1e-12);
    CHECK(report.pass);
  }

  for (uint64_t seed = 1; seed <= 5; ++seed) {
    StateSpec spec = StateSpec::random(5, 2, seed, 0.5);
    SynthOptions prune_on;
    prune_on.prune_zero = true;
    Circuit base = hwk::synthesize(spec);
    Circuit pruned = hwk::synthesize(spec, prune_on);
    CHECK(pruned.gates.size() <= base.gates.size());
    CHECK(max_state_diff(hwk::run(base), hwk::run(pruned)) <= 1e-10);
  }
}

TEST_CASE("ancillas stay inside the reserved block and end disentangled") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      StateSpec spec = StateSpec::dicke(n, k);
      Circuit c = hwk::synthesize(spec);
      int m = n > 3 ? n - 3 : 0;
      CHECK(c.layout.total() == n + m);
      int32_t max_wire = -1;
      for (const Gate& g : c.gates) {
        for (int i = 0; i < g.arity(); ++i) max_wire = std::max(max_wire, g.qubit[static_cast<size_t>(i)]);
      }
      if (n >= 4) {
        CHECK(max_wire == n + m - 1);  // a_3, the deepest ancilla, is always reached
      } else {
        CHECK(max_wire < n);
      }
      if (n + m <= 12) {
        hwk::VerifyReport report = hwk::compare_to_spec(hwk::run(c), spec);
        CHECK(report.ancilla_residual <= 1e-12);
      }
    }
  }
}

TEST_CASE("path indicator holds at every traced node entry") {
  for (auto [n, k, seed] : {std::tuple{6, 3, 5ull}, std::tuple{7, 3, 6ull}, std::tuple{5, 4, 7ull}}) {
    StateSpec spec = StateSpec::random(n, k, seed);
    std::vector<hwk::NodeVisit> trace;
    Circuit c = hwk::synthesize(spec, {}, &trace);
    REQUIRE(!trace.empty());

    const int m = n > 3 ? n - 3 : 0;
    hwk::StateVector state(c.layout.total());
    size_t applied = 0;
    size_t next = 0;
    auto check_visit = [&](const hwk::NodeVisit& visit) {
      const uint64_t control_bit = 1ull << (c.layout.total() - 1 - visit.control);
      const uint64_t suffix_mask = (1ull << visit.level) - 1;
      // Every left-edge descent X-conditions its wire, so the register holds
      // the suffix with its zero bits flipped; undo that frame before
      // comparing against the node's logical suffix.
      const uint64_t flip_mask = suffix_mask & ~visit.suffix;
      double mismatch = 0.0;
      for (uint64_t idx = 0; idx < state.size(); ++idx) {
        if (!(idx & control_bit)) continue;
        uint64_t working_suffix = ((idx >> m) & suffix_mask) ^ flip_mask;
        if (working_suffix != visit.suffix) mismatch += std::norm(state.amplitude(idx));
      }
      CHECK(mismatch <= 1e-12);
    };
    for (const Gate& g : c.gates) {
      while (next < trace.size() && trace[next].gate_offset == applied) check_visit(trace[next++]);
      state.apply(g);
      ++applied;
    }
    while (next < trace.size() && trace[next].gate_offset == applied) check_visit(trace[next++]);
    CHECK(next == trace.size());
  }
}

TEST_CASE("trace requires the raw gate stream") {
  StateSpec spec = StateSpec::dicke(4, 2);
  std::vector<hwk::NodeVisit> trace;
  SynthOptions opts;
  opts.peephole = true;
  CHECK_THROWS_AS(hwk::synthesize(spec, opts, &trace), hwk::Error);
}

TEST_CASE("gate count certificate") {
  hwk::GateCountCertificate c21 = hwk::gate_count_certificate(StateSpec::dicke(2, 1));
  CHECK(c21.internal_nodes == 1);
  CHECK(c21.total_gates == 5);
  CHECK(c21.bound == 11);
  CHECK(c21.ok);

  hwk::GateCountCertificate c42 = hwk::gate_count_certificate(StateSpec::dicke(4, 2));
  CHECK(c42.internal_nodes == 5);
  CHECK(c42.total_gates == 30);  // hand trace: 2 init + 6+6+4+8+4 across the five internal nodes
  CHECK(c42.bound == 52);
  CHECK(c42.ok);

  hwk::GateCountCertificate trivial = hwk::gate_count_certificate(StateSpec::dicke(5, 5));
  CHECK(trivial.internal_nodes == 0);
  CHECK(trivial.total_gates == 5);
  CHECK(trivial.bound == 5);
  CHECK(trivial.ok);
}

TEST_CASE("per-leaf gate cost stays within 10 + k/C") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      hwk::GateCountCertificate cert = hwk::gate_count_certificate(StateSpec::dicke(n, k));
      double c = static_cast<double>(hwk::binomial(n, k));
      CHECK(static_cast<double>(cert.total_gates) / c <= 10.0 + static_cast<double>(k) / c);
    }
  }
}

TEST_CASE("decomposed circuits use only rotation kinds and match") {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 2}}) {
    StateSpec spec = StateSpec::random(n, k, 21);
    SynthOptions opts;
    opts.decompose_u3 = true;
    Circuit plain = hwk::synthesize(spec);
    Circuit rotated = hwk::synthesize(spec, opts);
    for (const Gate& g : rotated.gates) {
      CHECK((g.kind == GateKind::X || g.kind == GateKind::CNOT || g.kind == GateKind::CCX ||
             g.kind == GateKind::RY || g.kind == GateKind::RZ || g.kind == GateKind::CRY ||
             g.kind == GateKind::CRZ));
    }
    CHECK(max_state_diff(hwk::run(plain), hwk::run(rotated)) <= 1e-10);
  }
}

TEST_CASE("synthesis cost scales linearly along the diagonal") {
  // Coarse check that doubling C(n,k) costs at most ~3x the runtime; wide
  // margins keep it robust on loaded machines.
  auto measure = [](int n) {
    StateSpec spec = StateSpec::dicke(n, n / 2);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      Circuit c = hwk::synthesize(spec);
      auto stop = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(stop - start).count() +
                                static_cast<double>(c.gates.size()) * 0.0);
    }
    return best;
  };
  double t16 = std::max(measure(16), 1e-4);
  double t20 = measure(20);
  double c_ratio = static_cast<double>(hwk::binomial(20, 10)) / static_cast<double>(hwk::binomial(16, 8));
  CHECK(t20 / t16 <= 3.0 * c_ratio);
}
