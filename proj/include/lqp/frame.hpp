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

#ifndef LQP_FRAME_HPP
#define LQP_FRAME_HPP

#include <optional>
#include <string>

#include "lqp/linalg.hpp"

namespace lqp {

/// A gate: a square matrix M with M^dag M = scale * I for a positive
/// rational scale. Rays absorb the scale, so "unitary up to scale" is all
/// that ray semantics needs; it is also what keeps the Hadamard gate inside
/// the Gaussian rationals (stored as [[1,1],[1,-1]] without the 1/sqrt(2)).
struct GateDef {
  std::string name;
  int arity = 0;
  Mat m;
  Rational scale;  // M^dag M = scale * I

  /// Matrix of the inverse ray map (the adjoint; rays absorb 1/scale).
  Mat inverse_ray_map() const { return m.adjoint(); }
};

/// Builtin gates: X, Z, H (unnormalized), CNOT (control = first index).
/// Throws LqpError(Arity) on any other name.
GateDef builtin_gate(const std::string& name);
bool is_builtin_gate_name(const std::string& name);

/// Checks M^dag M = c*I with c a positive rational and fills in the scale.
/// Throws LqpError(Parse) naming the offending entry otherwise.
void validate_gate(GateDef& g);

/// Orthogonal projection of r onto w; nullopt iff r is orthogonal to w.
std::optional<Ray> project_ray(const Subspace& w, const Ray& r);

/// The subspace of n-qubit states whose idx-qubits are separated from the
/// rest and carry the given local state: psi tensored with every basis
/// state of the remaining qubits. Being a single ray on the idx side makes
/// this set of states exactly the ray set of the spanned subspace.
Subspace local_state_property(const Vec& psi, const std::vector<int>& idx,
                              int n);

/// Non-orthogonality: some measurement leads from s to t.
bool measurement_related(const Ray& s, const Ray& t);

/// Map-state duality: for a nonzero 2x2 map f with f(e_a) = sum_b m_ab e_b,
/// returns the 4-entry coefficient vector sum_ab m_ab |a b>, ordered
/// |00>,|01>,|10>,|11> over the (input, output) qubit pair.
Vec map_state_psi(const Mat& f);

/// The single-qubit map induced by an n-qubit map F: restrict F to
/// x tensor |0...0> and project back onto that embedded copy of the qubit
/// space. May be the zero map.
Mat restrict_first(const Mat& f, int n);

/// The set of n-qubit states whose (i, j) qubits are separated from the
/// rest and entangled according to pi's induced single-qubit map: the
/// subspace spanned by psi(F_(1)) at (i, j) tensored with each basis state
/// of the remaining qubits. When the induced map is zero the property is
/// empty ({0}); *zero_map reports that case when non-null.
Subspace entangled_property(const Mat& pi, int i, int j, int n,
                            bool* zero_map = nullptr);

}  // namespace lqp

#endif
