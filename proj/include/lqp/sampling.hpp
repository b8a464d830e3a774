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

#ifndef LQP_SAMPLING_HPP
#define LQP_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lqp/ast.hpp"
#include "lqp/frame.hpp"
#include "lqp/linalg.hpp"

namespace lqp {

struct SampleConfig {
  std::uint64_t seed = 1;
  int count = 100;     // instantiations per suite case
  long height = 3;     // Gaussian-integer coefficient bound
  int star_bound = 64;
};

/// Deterministic pseudorandom generation: identical seeds give identical
/// value sequences on every platform (raw mt19937_64 output with explicit
/// modulo mapping; no library distributions).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  long range(long lo, long hi);  // inclusive
  bool coin() { return next() & 1; }
  size_t pick(size_t n) { return static_cast<size_t>(range(0, static_cast<long>(n) - 1)); }

  GaussianRational scalar(long height, bool real = false);
  Vec vec(size_t dim, long height, bool real = false);  // nonzero
  Ray ray(size_t dim, long height, bool real = false);
  Subspace subspace(size_t dim, long height);  // span of 1..3 sampled rays

  /// Nonzero 2x2 matrix with Gaussian-integer entries.
  Mat map2(long height, bool real = false);

  /// Rational unitary-up-to-scale 2x2: [[a,b],[-conj(b),conj(a)]] times a
  /// diagonal unit phase.
  Mat unitary2(long height, bool real = false);

  int index(int n) { return static_cast<int>(range(1, n)); }
  std::vector<int> distinct_indices(int k, int n);

 private:
  std::mt19937_64 eng_;
};

/// A sampled builtin gate application on sampled qubits.
PPtr sample_gate(Sampler& s, int n);

/// A sampled member of the testable-formula grammar:
/// false | c_i | E[pi](i,j) | phi & phi | [pi]phi with deterministic pi.
FPtr sample_testable_formula(Sampler& s, int n, int depth);

/// A sampled deterministic program (gates, tests of testable formulas,
/// adjoints, compositions).
PPtr sample_deterministic_program(Sampler& s, int n, int depth);

}  // namespace lqp

#endif
