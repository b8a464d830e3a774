// Copyright 2026 The lqpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LQP_SUITES_HPP
#define LQP_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lqp/checker.hpp"
#include "lqp/sampling.hpp"

namespace lqp {

struct SuiteCase {
  std::string id;
  std::string description;
  bool pass = true;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;  // excluded from serializations (determinism)
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<SuiteCase> cases;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  /// Deterministic renderings: identical (suite, seed, count) inputs give
  /// byte-identical output; per-case timings are deliberately omitted.
  std::string to_text() const;
  std::string to_json() const;
};

/// The four-branch teleportation protocol at n = 3: entangle, measure in
/// the Bell basis, apply the classically controlled corrections.
PPtr teleportation_program();

/// The logical Bell formula: the entanglement atom of Z^x then X^y at
/// qubit 1, placed at (i, j). Zero exponents are elided; the (0,0) case
/// uses X;X, which denotes the identity map.
FPtr bell_formula(int x, int y, int i, int j);

/// The two-qubit characteristic formula of beta_xy at (i, j).
FPtr bell_characteristic_formula(int x, int y, int i, int j);

/// The characteristic formula of the gamma state at (i, j).
FPtr gamma_characteristic_formula(int i, int j);

/// Decides the teleportation correctness validity
///   phi1 /\ E[id](2,3) -> [teleport] phi3
/// for a testable 1-local phi1 (locality checked syntactically,
/// testability semantically: the denotation must be a closed subspace).
/// Throws LqpError(NotTestableLocal) otherwise; requires n = 3.
Verdict verify_teleportation(const FPtr& phi1, const Model& m);

/// Brute-force adjudication of the entanglement-composition dagger
/// placement at n = 4. For each sampled 5-tuple of single-qubit maps the
/// protocol (apply U at j and V at k, test the G-entanglement at (j,k))
/// is executed by explicit tensor calculus and the resulting (i,l) state
/// is compared against the three candidate composites.
struct CompositionReport {
  int samples = 0;            // tuples sampled
  int executed = 0;           // tuples whose test was defined
  int matched_corrected = 0;  // H V^T conj(G) U F
  int matched_axiom = 0;      // H V+ G U F (dagger on the k-side map)
  int matched_lemma = 0;      // H U+ G V F (dagger on the j-side map)
  std::string summary() const;
};

CompositionReport run_composition_oracle(const SampleConfig& cfg, bool real);

SuiteReport run_frame_suite(const SampleConfig& cfg);
SuiteReport run_axiom_suite(const SampleConfig& cfg);
SuiteReport run_bell_suite(const SampleConfig& cfg);
SuiteReport run_teleport_suite(const SampleConfig& cfg);

/// Decision-procedure soundness: sampled symbolic formulas, decide(valid)
/// cross-checked against pointwise evaluation at sampled rays and against
/// the emitted counterexample. rays_per_formula rays are checked for each
/// of cfg.count formulas.
SuiteReport run_soundness_suite(const SampleConfig& cfg,
                                int rays_per_formula = 50);

SuiteReport run_suite(const std::string& name, const SampleConfig& cfg);

}  // namespace lqp

#endif
