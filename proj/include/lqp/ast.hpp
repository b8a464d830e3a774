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

#ifndef LQP_AST_HPP
#define LQP_AST_HPP

#include <memory>
#include <string>
#include <vector>

namespace lqp {

struct Formula;
struct Program;
using FPtr = std::shared_ptr<const Formula>;
using PPtr = std::shared_ptr<const Program>;

/// Formula constructors. The first six are the core language; the rest are
/// derived connectives kept as sugar nodes until desugaring.
enum class FK {
  Const,     // c_i, c in {0,1,+,-}
  Var,       // p_I (empty I = full arity, resolved at desugar time)
  Entangle,  // E[pi](i,j)
  Not,
  And,
  Box,       // [pi]phi
  // ---- sugar ----
  Or,
  Implies,
  QJoin,    // quantum join (+)
  Verum,    // true
  Falsum,   // false
  Dia,      // <pi>phi
  PostDia,  // post<pi>phi, the strongest-postcondition dual
  MeasDia,  // dia phi
  MeasBox,  // box phi
  Ortho,    // ~phi
};

/// Program constructors. Set0 and First are sugar.
enum class PK {
  Trivial,  // top: the total relation
  Test,     // phi?
  Gate,     // U_I
  Adjoint,  // adj(pi)
  Choice,   // pi + pi
  Seq,      // pi ; pi
  Star,     // pi*
  // ---- sugar ----
  Set0,   // set0(I): reset the listed qubits to |0>
  First,  // first(pi): the induced single-qubit map at qubit 1
};

struct Formula {
  FK k;
  char c = 0;             // Const
  int i = 0, j = 0;       // Const/Entangle indices
  std::string var;        // Var
  std::vector<int> idx;   // Var
  FPtr a, b;              // children
  PPtr p;                 // Box/Dia/PostDia/Entangle
};

struct Program {
  PK k;
  std::string gate;       // Gate
  std::vector<int> idx;   // Gate/Set0
  PPtr a, b;              // children
  FPtr f;                 // Test
};

// Formula factories.
FPtr fconst(char c, int i);
FPtr fvar(std::string name, std::vector<int> idx);
FPtr fent(PPtr p, int i, int j);
FPtr fnot(FPtr a);
FPtr fand(FPtr a, FPtr b);
FPtr fbox(PPtr p, FPtr a);
FPtr for_(FPtr a, FPtr b);
FPtr fimplies(FPtr a, FPtr b);
FPtr fqjoin(FPtr a, FPtr b);
FPtr fverum();
FPtr ffalsum();
FPtr fdia(PPtr p, FPtr a);
FPtr fpostdia(PPtr p, FPtr a);
FPtr fmdia(FPtr a);
FPtr fmbox(FPtr a);
FPtr fortho(FPtr a);

// Program factories.
PPtr ptrivial();
PPtr ptest(FPtr f);
PPtr pgate(std::string name, std::vector<int> idx);
PPtr padj(PPtr a);
PPtr pchoice(PPtr a, PPtr b);
PPtr pseq(PPtr a, PPtr b);
PPtr pstar(PPtr a);
PPtr pset0(std::vector<int> idx);
PPtr pfirst(PPtr a);

/// Structural equality.
bool equal(const FPtr& a, const FPtr& b);
bool equal(const PPtr& a, const PPtr& b);

/// True iff the trivial program occurs anywhere in p, not descending into
/// test formulas (a test is a single projector no matter what its argument
/// contains).
bool contains_trivial(const PPtr& p);

}  // namespace lqp

#endif
