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

#ifndef LQP_CHECKER_HPP
#define LQP_CHECKER_HPP

#include <optional>
#include <vector>

#include "lqp/ast.hpp"
#include "lqp/model.hpp"
#include "lqp/nodal.hpp"

namespace lqp {

/// Validation + desugaring + adjoint normalization; every checker entry
/// point below expects its input in this form.
FPtr prepare(const FPtr& f, const Model& m);
PPtr prepare(const PPtr& p, const Model& m);

/// The denotation of a symbolic-fragment formula as a set of states.
/// Throws LqpError(Fragment) when an atom falls outside the fragment:
/// E[top], a variable with 1 < dim and a proper index subset, or programs
/// that are not unions of deterministic branches inside an E atom.
NodalSet denote(const FPtr& f, const Model& m);

/// The linear map denoted by a deterministic, adjoint-normalized program:
/// products of gate lifts and projectors. Throws LqpError(Nondet) on
/// top/choice/star.
Mat denote_deterministic(const PPtr& p, const Model& m);

/// Weakest precondition of p with respect to post.
NodalSet wp(const PPtr& p, const NodalSet& post, const Model& m);

/// Greatest fixpoint of X -> post /\ wp(p, X), used for [p*].
/// Throws LqpError(StarBound) if star_bound iterations pass without
/// stabilization.
NodalSet star_fixpoint(const PPtr& p, const NodalSet& post, const Model& m);

/// Pointwise satisfaction. Handles the non-symbolic atoms by factoring
/// the state; boxes over top-free programs enumerate successors, boxes
/// over programs containing top go through the symbolic route.
bool holds_at(const Ray& s, const FPtr& f, const Model& m);

/// The finite successor set of s under p. Throws LqpError(Top) when p
/// contains the trivial program.
std::vector<Ray> successors(const Ray& s, const PPtr& p, const Model& m);

struct Verdict {
  bool value = false;
  std::optional<Ray> witness;  // counterexample (valid) / model (sat)
};

/// Full pipeline: prepare, denote, decide. For `valid`, the witness (when
/// invalid) falsifies the formula; for `sat`, the witness (when
/// satisfiable) satisfies it.
Verdict decide_valid(const FPtr& f, const Model& m);
Verdict decide_sat(const FPtr& f, const Model& m);

/// A concrete ray inside a nonempty nodal set, found by walking the
/// polynomial curve sum_k t^k b_k over the cell basis: each proper neg
/// excludes finitely many t, so the walk terminates.
Ray witness(const NodalSet& a);

}  // namespace lqp

#endif
