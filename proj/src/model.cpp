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

#include "lqp/model.hpp"

#include "lqp/error.hpp"

namespace lqp {

const GateDef& Model::gate(const std::string& name) const {
  auto it = gates.find(name);
  if (it == gates.end())
    throw LqpError(Err::Arity, "unknown gate '" + name + "'");
  return it->second;
}

Model Model::with_var(const std::string& name, Subspace value) const {
  Model m = *this;
  size_t d = value.ambient();
  int arity = 0;
  while ((size_t{1} << arity) < d) ++arity;
  if ((size_t{1} << arity) != d)
    throw LqpError(Err::Arity, "valuation ambient dimension is not a power of two");
  if (arity > n)
    throw LqpError(Err::Arity, "valuation arity exceeds the model");
  m.var_arity[name] = arity;
  m.valuation.erase(name);
  m.valuation.emplace(name, std::move(value));
  return m;
}

Model make_model(int n) {
  if (n < 1) throw LqpError(Err::Arity, "qubit count must be positive");
  Model m;
  m.n = n;
  for (const char* g : {"X", "Z", "H", "CNOT"}) {
    GateDef def = builtin_gate(g);
    m.gates.emplace(def.name, std::move(def));
  }
  return m;
}

Model elaborate(const ModelDecl& decl) {
  Model m = make_model(decl.n);
  for (const GateDef& raw : decl.gates) {
    if (is_builtin_gate_name(raw.name))
      throw LqpError(Err::Parse,
                     "gate '" + raw.name + "' would shadow a builtin gate");
    if (m.gates.count(raw.name))
      throw LqpError(Err::Parse, "gate '" + raw.name + "' declared twice");
    if (raw.arity > decl.n)
      throw LqpError(Err::Arity,
                     "gate '" + raw.name + "' arity exceeds the qubit count");
    GateDef g = raw;
    validate_gate(g);
    m.gates.emplace(g.name, std::move(g));
  }
  for (const auto& v : decl.vars) {
    if (m.valuation.count(v.name))
      throw LqpError(Err::Parse, "variable '" + v.name + "' declared twice");
    if (v.arity > decl.n)
      throw LqpError(Err::Arity,
                     "variable '" + v.name + "' arity exceeds the qubit count");
    size_t d = size_t{1} << v.arity;
    for (const Vec& vec : v.span)
      if (vec.dim() != d)
        throw LqpError(Err::Arity, "variable '" + v.name + "': vector of dimension " +
                                       std::to_string(vec.dim()) +
                                       " does not match arity " +
                                       std::to_string(v.arity));
    m.var_arity[v.name] = v.arity;
    m.valuation.emplace(v.name, Subspace::span(v.span, d));
  }
  for (const auto& s : decl.states) {
    if (m.states.count(s.name))
      throw LqpError(Err::Parse, "state '" + s.name + "' declared twice");
    if (s.value.dim() != m.dim())
      throw LqpError(Err::Arity, "state '" + s.name + "' has dimension " +
                                     std::to_string(s.value.dim()) +
                                     ", expected " + std::to_string(m.dim()));
    auto r = Ray::make(s.value);
    if (!r)
      throw LqpError(Err::Parse, "state '" + s.name + "' is the zero vector");
    m.states.emplace(s.name, *r);
  }
  return m;
}

namespace {

void check_index(int i, const Model& m, const std::string& what) {
  if (i < 1 || i > m.n)
    throw LqpError(Err::Arity, what + " index " + std::to_string(i) +
                                   " out of range 1.." + std::to_string(m.n));
}

}  // namespace

void validate_ast(const FPtr& f, const Model& m) {
  if (!f) return;
  switch (f->k) {
    case FK::Const:
      check_index(f->i, m, "constant");
      break;
    case FK::Var: {
      auto it = m.var_arity.find(f->var);
      if (it == m.var_arity.end())
        throw LqpError(Err::Arity, "undeclared variable '" + f->var + "'");
      int arity = it->second;
      if (f->idx.empty()) {
        if (arity != m.n)
          throw LqpError(Err::Arity,
                         "variable '" + f->var + "' has arity " +
                             std::to_string(arity) +
                             "; bare use requires arity " + std::to_string(m.n));
      } else {
        if (static_cast<int>(f->idx.size()) != arity)
          throw LqpError(Err::Arity,
                         "variable '" + f->var + "' has arity " +
                             std::to_string(arity) + ", used with " +
                             std::to_string(f->idx.size()) + " indices");
        for (int i : f->idx) check_index(i, m, "variable");
      }
      break;
    }
    case FK::Entangle:
      check_index(f->i, m, "entanglement");
      check_index(f->j, m, "entanglement");
      if (m.n < 2)
        throw LqpError(Err::Arity, "entanglement atoms need at least 2 qubits");
      validate_ast(f->p, m);
      break;
    default:
      validate_ast(f->a, m);
      validate_ast(f->b, m);
      validate_ast(f->p, m);
  }
}

void validate_ast(const PPtr& p, const Model& m) {
  if (!p) return;
  switch (p->k) {
    case PK::Gate: {
      const GateDef& g = m.gate(p->gate);
      if (static_cast<int>(p->idx.size()) != g.arity)
        throw LqpError(Err::Arity, "gate '" + p->gate + "' has arity " +
                                       std::to_string(g.arity) +
                                       ", used with " +
                                       std::to_string(p->idx.size()) +
                                       " indices");
      for (int i : p->idx) check_index(i, m, "gate");
      break;
    }
    case PK::Set0:
      for (int i : p->idx) check_index(i, m, "set0");
      break;
    case PK::Test:
      validate_ast(p->f, m);
      break;
    default:
      validate_ast(p->a, m);
      validate_ast(p->b, m);
  }
}

}  // namespace lqp
