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

#ifndef LQP_MODEL_HPP
#define LQP_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "lqp/ast.hpp"
#include "lqp/frame.hpp"
#include "lqp/linalg.hpp"

namespace lqp {

/// Raw content of a model file, before elaboration.
struct ModelDecl {
  int n = 0;
  struct VarDecl {
    std::string name;
    int arity;
    std::vector<Vec> span;
  };
  struct StateDecl {
    std::string name;
    Vec value;
  };
  std::vector<VarDecl> vars;
  std::vector<GateDef> gates;  // matrices unvalidated at this point
  std::vector<StateDecl> states;
};

/// An elaborated model: qubit count, subspace-valued valuation, validated
/// gate library (builtins included), named states. Immutable in use.
struct Model {
  int n = 0;
  int star_bound = 64;
  std::map<std::string, Subspace> valuation;
  std::map<std::string, int> var_arity;
  std::map<std::string, GateDef> gates;
  std::map<std::string, Ray> states;

  size_t dim() const { return size_t{1} << n; }
  const GateDef& gate(const std::string& name) const;
  bool has_var(const std::string& name) const {
    return valuation.count(name) != 0;
  }

  /// Copy with one variable rebound (suites rebind sampled valuations).
  Model with_var(const std::string& name, Subspace value) const;
};

/// Builtin gates only.
Model make_model(int n);

/// Checks dimensions, validates gates, rejects redefinition of builtins.
Model elaborate(const ModelDecl& decl);

/// Arity/index validation of an AST against a model; throws LqpError(Arity)
/// on undeclared names, arity mismatches, or out-of-range indices.
void validate_ast(const FPtr& f, const Model& m);
void validate_ast(const PPtr& p, const Model& m);

}  // namespace lqp

#endif
