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

// hwkc: command-line front end over the hwk C API.
//
// Exit codes: 0 success, 1 input/usage error, 2 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hwk/hwk.h"

namespace {

constexpr uint64_t kDefaultSeed = 42;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct SpecSource {
  std::string in_path;
  std::vector<int> dicke;      // n k
  std::vector<int> random_nk;  // n k
  uint64_t seed = kDefaultSeed;
  double sparsity = 0.0;
  bool renormalize = false;

  void add_options(CLI::App* cmd) {
    auto* in = cmd->add_option("--in", in_path, "input spec JSON file");
    auto* dk = cmd->add_option("--dicke", dicke, "uniform weight-k state for N K")->expected(2);
    auto* rnd = cmd->add_option("--random", random_nk, "seeded random state for N K")->expected(2);
    cmd->add_option("--seed", seed, "seed for --random (default 42)");
    cmd->add_option("--sparsity", sparsity, "fraction of --random amplitudes zeroed, in [0,1)");
    cmd->add_flag("--renormalize", renormalize, "rescale --in amplitudes to unit norm");
    in->excludes(dk)->excludes(rnd);
    dk->excludes(rnd);
  }

  int requested() const { return (!in_path.empty() ? 1 : 0) + (!dicke.empty() ? 1 : 0) + (!random_nk.empty() ? 1 : 0); }

  hwk_status make(hwk_spec** out) const {
    if (!in_path.empty()) {
      return hwk_spec_read(in_path.c_str(), renormalize ? HWK_SPEC_RENORMALIZE : 0, out);
    }
    if (!dicke.empty()) return hwk_spec_dicke(dicke[0], dicke[1], out);
    return hwk_spec_random(random_nk[0], random_nk[1], seed, sparsity, out);
  }

  // Known qubit count before building the spec, -1 for file inputs.
  int n() const {
    if (!dicke.empty()) return dicke[0];
    if (!random_nk.empty()) return random_nk[0];
    return -1;
  }
};

struct SynthFlags {
  bool peephole = false;
  bool prune_zero = false;
  bool decompose_u3 = false;

  void add_options(CLI::App* cmd) {
    cmd->add_flag("--peephole", peephole, "cancel adjacent X gate pairs");
    cmd->add_flag("--prune-zero", prune_zero, "skip zero-weight subtrees");
    cmd->add_flag("--decompose-u3", decompose_u3, "emit Rz/Ry rotations instead of U3/CU3");
  }

  uint32_t mask() const {
    uint32_t flags = 0;
    if (peephole) flags |= HWK_SYNTH_PEEPHOLE;
    if (prune_zero) flags |= HWK_SYNTH_PRUNE_ZERO;
    if (decompose_u3) flags |= HWK_SYNTH_DECOMPOSE_U3;
    return flags;
  }
};

int fail_input(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = hwk_last_error();
  if (detail && detail[0]) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitInput;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitInput;
  }
  out << text;
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kExitInput;
  }
  return kExitOk;
}

using SpecHandle = std::unique_ptr<hwk_spec, decltype(&hwk_spec_free)>;
using CircuitHandle = std::unique_ptr<hwk_circuit, decltype(&hwk_circuit_free)>;
using TreeHandle = std::unique_ptr<hwk_tree, decltype(&hwk_tree_free)>;

std::string take_string(char* owned) {
  std::string s(owned ? owned : "");
  hwk_string_free(owned);
  return s;
}

int cmd_synth(const SpecSource& source, const SynthFlags& flags, const std::string& out_path,
              const std::string& format) {
  hwk_spec* raw_spec = nullptr;
  if (source.make(&raw_spec) != HWK_OK) return fail_input("invalid spec");
  SpecHandle spec(raw_spec, hwk_spec_free);

  hwk_circuit* raw_circuit = nullptr;
  if (hwk_synthesize(spec.get(), flags.mask(), &raw_circuit) != HWK_OK) {
    return fail_input("synthesis failed");
  }
  CircuitHandle circuit(raw_circuit, hwk_circuit_free);

  char* text = nullptr;
  hwk_status st = format == "json" ? hwk_circuit_to_json(circuit.get(), &text)
                                   : hwk_circuit_to_qasm(circuit.get(), &text);
  if (st != HWK_OK) return fail_input("serialization failed");
  int rc = write_output(out_path, take_string(text));
  if (rc != kExitOk) return rc;

  hwk_count_report cert{};
  if (hwk_gate_count_certificate(spec.get(), &cert) != HWK_OK) return fail_input("certificate failed");
  std::cerr << "n=" << hwk_spec_n(spec.get()) << " k=" << hwk_spec_k(spec.get())
            << " qubits=" << hwk_circuit_num_qubits(circuit.get())
            << " ancillas=" << hwk_circuit_num_ancillas(circuit.get())
            << " internal_nodes=" << cert.internal_nodes
            << " gates=" << hwk_circuit_num_gates(circuit.get())
            << " depth=" << hwk_circuit_depth(circuit.get()) << " bound=" << cert.bound << "\n";
  const char* kinds[] = {"x", "cx", "ccx", "u3", "cu3", "ry", "rz", "cry", "crz"};
  std::cerr << "gate counts:";
  for (const char* kind : kinds) {
    uint64_t count = 0;
    if (hwk_circuit_count_kind(circuit.get(), kind, &count) == HWK_OK && count > 0) {
      std::cerr << " " << kind << "=" << count;
    }
  }
  std::cerr << "\n";
  return kExitOk;
}

int cmd_verify(const SpecSource& source, const SynthFlags& flags, double nudge, bool has_nudge) {
  // Guard before materializing a huge generated spec.
  int n = source.n();
  if (n > 3 && n + (n - 3) > HWK_MAX_SIM_QUBITS) {
    std::cerr << "error: TooManyQubits: n=" << n << " needs " << n + (n - 3) << " qubits, limit is "
              << HWK_MAX_SIM_QUBITS << "\n";
    return kExitInput;
  }

  hwk_spec* raw_spec = nullptr;
  if (source.make(&raw_spec) != HWK_OK) return fail_input("invalid spec");
  SpecHandle spec(raw_spec, hwk_spec_free);

  hwk_verify_report report{};
  hwk_status st;
  if (has_nudge) {
    hwk_circuit* raw_circuit = nullptr;
    if (hwk_synthesize(spec.get(), flags.mask(), &raw_circuit) != HWK_OK) {
      return fail_input("synthesis failed");
    }
    CircuitHandle circuit(raw_circuit, hwk_circuit_free);
    if (hwk_circuit_nudge_first_rotation(circuit.get(), nudge) != HWK_OK) {
      return fail_input("nudge failed");
    }
    st = hwk_verify_circuit(circuit.get(), spec.get(), &report);
  } else {
    st = hwk_verify(spec.get(), flags.mask(), &report);
  }
  if (st != HWK_OK) return fail_input("verification could not run");

  std::printf("fidelity=%.15g\n", report.fidelity);
  std::printf("max_amp_error=%.15g\n", report.max_amp_error);
  std::printf("ancilla_residual=%.15g\n", report.ancilla_residual);
  std::printf("%s\n", report.pass ? "PASS" : "FAIL");
  return report.pass ? kExitOk : kExitVerification;
}

int cmd_stats(int n_min, int n_max, int k_min, int k_max) {
  if (n_min < 1 || n_max > 16 || n_min > n_max) {
    std::cerr << "error: stats supports 1 <= n-min <= n-max <= 16\n";
    return kExitInput;
  }
  std::printf("n\tk\tC\tCk\tClog2n\tinternal\tgates\tgates_peephole\tdepth\tancillas\tratio\n");
  for (int n = n_min; n <= n_max; ++n) {
    int k_hi = k_max < 0 ? n : std::min(k_max, n);
    for (int k = std::max(0, k_min); k <= k_hi; ++k) {
      hwk_spec* raw_spec = nullptr;
      if (hwk_spec_dicke(n, k, &raw_spec) != HWK_OK) return fail_input("spec generation failed");
      SpecHandle spec(raw_spec, hwk_spec_free);

      hwk_circuit* raw_plain = nullptr;
      if (hwk_synthesize(spec.get(), 0, &raw_plain) != HWK_OK) return fail_input("synthesis failed");
      CircuitHandle plain(raw_plain, hwk_circuit_free);
      hwk_circuit* raw_reduced = nullptr;
      if (hwk_synthesize(spec.get(), HWK_SYNTH_PEEPHOLE, &raw_reduced) != HWK_OK) {
        return fail_input("synthesis failed");
      }
      CircuitHandle reduced(raw_reduced, hwk_circuit_free);

      uint64_t c = hwk_binomial(n, k);
      uint64_t gates = hwk_circuit_num_gates(plain.get());
      std::printf("%d\t%d\t%llu\t%llu\t%.1f\t%llu\t%llu\t%llu\t%llu\t%d\t%.3f\n", n, k,
                  static_cast<unsigned long long>(c), static_cast<unsigned long long>(c * static_cast<uint64_t>(k)),
                  static_cast<double>(c) * std::log2(static_cast<double>(n)),
                  static_cast<unsigned long long>(c - 1), static_cast<unsigned long long>(gates),
                  static_cast<unsigned long long>(hwk_circuit_num_gates(reduced.get())),
                  static_cast<unsigned long long>(hwk_circuit_depth(plain.get())),
                  hwk_circuit_num_ancillas(plain.get()),
                  static_cast<double>(gates) / static_cast<double>(c));
    }
  }
  return kExitOk;
}

int cmd_tree(int n, int k, const std::string& out_path) {
  hwk_tree* raw_tree = nullptr;
  if (hwk_tree_build(n, k, &raw_tree) != HWK_OK) return fail_input("tree construction failed");
  TreeHandle tree(raw_tree, hwk_tree_free);
  char* dot = nullptr;
  if (hwk_tree_to_dot(tree.get(), &dot) != HWK_OK) return fail_input("dot export failed");
  return write_output(out_path, take_string(dot));
}

int cmd_random(int n, int k, uint64_t seed, double sparsity, const std::string& out_path) {
  hwk_spec* raw_spec = nullptr;
  if (hwk_spec_random(n, k, seed, sparsity, &raw_spec) != HWK_OK) return fail_input("generation failed");
  SpecHandle spec(raw_spec, hwk_spec_free);
  char* json = nullptr;
  if (hwk_spec_to_json(spec.get(), &json) != HWK_OK) return fail_input("serialization failed");
  return write_output(out_path, take_string(json));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hwkc: circuits preparing fixed-Hamming-weight quantum states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hwk_version()));

  auto* synth = app.add_subcommand("synth", "synthesize a preparation circuit");
  SpecSource synth_source;
  synth_source.add_options(synth);
  SynthFlags synth_flags;
  synth_flags.add_options(synth);
  std::string synth_out;
  std::string synth_format = "qasm";
  synth->add_option("-o,--out", synth_out, "output file (default stdout)");
  synth->add_option("--format", synth_format, "qasm or json")->check(CLI::IsMember({"qasm", "json"}));

  auto* verify = app.add_subcommand("verify", "synthesize, simulate, and check against the spec");
  SpecSource verify_source;
  verify_source.add_options(verify);
  SynthFlags verify_flags;
  verify_flags.add_options(verify);
  double nudge = 0.0;
  auto* nudge_opt =
      verify->add_option("--nudge-angle", nudge, "perturb the first rotation angle (negative control)");

  auto* stats = app.add_subcommand("stats", "gate-count table over (n, k) ranges, TSV to stdout");
  int n_min = 1, n_max = 8, k_min = 0, k_max = -1;
  stats->add_option("--n-min", n_min, "smallest n (default 1)");
  stats->add_option("--n-max", n_max, "largest n (default 8, limit 16)");
  stats->add_option("--k-min", k_min, "smallest k (default 0)");
  stats->add_option("--k-max", k_max, "largest k (default n)");

  auto* tree = app.add_subcommand("tree", "export the Hamming tree as Graphviz dot");
  int tree_n = 0, tree_k = 0;
  std::string tree_out;
  tree->add_option("n", tree_n, "string length")->required();
  tree->add_option("k", tree_k, "Hamming weight")->required();
  tree->add_option("-o,--out", tree_out, "output file (default stdout)");

  auto* random = app.add_subcommand("random", "write a seeded random spec as JSON");
  int random_n = 0, random_k = 0;
  uint64_t random_seed = kDefaultSeed;
  double random_sparsity = 0.0;
  std::string random_out;
  random->add_option("n", random_n, "qubit count")->required();
  random->add_option("k", random_k, "Hamming weight")->required();
  random->add_option("--seed", random_seed, "seed (default 42)");
  random->add_option("--sparsity", random_sparsity, "fraction of amplitudes zeroed, in [0,1)");
  random->add_option("-o,--out", random_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (synth->parsed()) {
    if (synth_source.requested() != 1) {
      std::cerr << "error: choose exactly one of --in, --dicke, --random\n";
      return kExitInput;
    }
    return cmd_synth(synth_source, synth_flags, synth_out, synth_format);
  }
  if (verify->parsed()) {
    if (verify_source.requested() != 1) {
      std::cerr << "error: choose exactly one of --in, --dicke, --random\n";
      return kExitInput;
    }
    return cmd_verify(verify_source, verify_flags, nudge, nudge_opt->count() > 0);
  }
  if (stats->parsed()) return cmd_stats(n_min, n_max, k_min, k_max);
  if (tree->parsed()) return cmd_tree(tree_n, tree_k, tree_out);
  if (random->parsed()) return cmd_random(random_n, random_k, random_seed, random_sparsity, random_out);
  return kExitInput;
}
