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

#ifndef LQP_SYNTAX_HPP
#define LQP_SYNTAX_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lqp/ast.hpp"

namespace lqp {

/// Concrete syntax, re-parseable: parse(print(a)) == a.
std::string print(const FPtr& f);
std::string print(const PPtr& p);

/// Expands every derived connective. The result uses only constants,
/// variables, entanglement atoms, negation, conjunction and boxes; programs
/// use only top/test/gate/adjoint/choice/seq/star. Double negations are
/// collapsed. n is the model's qubit count; it resolves bare variables
/// (arity n) and the qubit-reset sugar.
FPtr desugar(const FPtr& f, int n);
PPtr desugar(const PPtr& p, int n);

/// Pushes adjoints down to gate atoms: (a;b)+ -> b+;a+, (a u b)+ -> a+ u b+,
/// (a*)+ -> (a+)*, (a+)+ -> a, (phi?)+ -> phi?, top+ -> top.
PPtr normalize_adjoint(const PPtr& p);

/// normalize_adjoint applied to every program nested anywhere in f.
FPtr normalize_adjoint_deep(const FPtr& f);
PPtr normalize_adjoint_deep(const PPtr& p);

struct FormulaClass {
  bool testable = false;
  std::optional<std::set<int>> locality;  // least index set, or none
};

struct ProgramClass {
  bool deterministic = false;
  std::optional<std::set<int>> locality;
};

/// Syntactic classification, exactly along the testable / local /
/// deterministic grammars. Input must be desugared.
FormulaClass classify(const FPtr& f);
ProgramClass classify(const PPtr& p);

/// Substitutes the indices in `from` by the corresponding indices in `to`.
/// Requires |from| = |to|, both duplicate-free, and the argument local in
/// `from` (throws LqpError(Arity) otherwise). Entanglement atoms relabel
/// their endpoints only; their embedded program denotes an abstract
/// single-qubit map and is left untouched.
FPtr relabel(const FPtr& f, const std::vector<int>& from,
             const std::vector<int>& to);
PPtr relabel(const PPtr& p, const std::vector<int>& from,
             const std::vector<int>& to);

}  // namespace lqp

#endif
