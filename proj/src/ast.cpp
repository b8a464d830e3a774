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

#include "lqp/ast.hpp"

namespace lqp {

namespace {

std::shared_ptr<Formula> mkf(FK k) {
  auto f = std::make_shared<Formula>();
  f->k = k;
  return f;
}

std::shared_ptr<Program> mkp(PK k) {
  auto p = std::make_shared<Program>();
  p->k = k;
  return p;
}

}  // namespace

FPtr fconst(char c, int i) {
  auto f = mkf(FK::Const);
  f->c = c;
  f->i = i;
  return f;
}

FPtr fvar(std::string name, std::vector<int> idx) {
  auto f = mkf(FK::Var);
  f->var = std::move(name);
  f->idx = std::move(idx);
  return f;
}

FPtr fent(PPtr p, int i, int j) {
  auto f = mkf(FK::Entangle);
  f->p = std::move(p);
  f->i = i;
  f->j = j;
  return f;
}

FPtr fnot(FPtr a) {
  auto f = mkf(FK::Not);
  f->a = std::move(a);
  return f;
}

FPtr fand(FPtr a, FPtr b) {
  auto f = mkf(FK::And);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FPtr fbox(PPtr p, FPtr a) {
  auto f = mkf(FK::Box);
  f->p = std::move(p);
  f->a = std::move(a);
  return f;
}

FPtr for_(FPtr a, FPtr b) {
  auto f = mkf(FK::Or);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FPtr fimplies(FPtr a, FPtr b) {
  auto f = mkf(FK::Implies);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FPtr fqjoin(FPtr a, FPtr b) {
  auto f = mkf(FK::QJoin);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FPtr fverum() { return mkf(FK::Verum); }
FPtr ffalsum() { return mkf(FK::Falsum); }

FPtr fdia(PPtr p, FPtr a) {
  auto f = mkf(FK::Dia);
  f->p = std::move(p);
  f->a = std::move(a);
  return f;
}

FPtr fpostdia(PPtr p, FPtr a) {
  auto f = mkf(FK::PostDia);
  f->p = std::move(p);
  f->a = std::move(a);
  return f;
}

FPtr fmdia(FPtr a) {
  auto f = mkf(FK::MeasDia);
  f->a = std::move(a);
  return f;
}

FPtr fmbox(FPtr a) {
  auto f = mkf(FK::MeasBox);
  f->a = std::move(a);
  return f;
}

FPtr fortho(FPtr a) {
  auto f = mkf(FK::Ortho);
  f->a = std::move(a);
  return f;
}

PPtr ptrivial() { return mkp(PK::Trivial); }

PPtr ptest(FPtr f) {
  auto p = mkp(PK::Test);
  p->f = std::move(f);
  return p;
}

PPtr pgate(std::string name, std::vector<int> idx) {
  auto p = mkp(PK::Gate);
  p->gate = std::move(name);
  p->idx = std::move(idx);
  return p;
}

PPtr padj(PPtr a) {
  auto p = mkp(PK::Adjoint);
  p->a = std::move(a);
  return p;
}

PPtr pchoice(PPtr a, PPtr b) {
  auto p = mkp(PK::Choice);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PPtr pseq(PPtr a, PPtr b) {
  auto p = mkp(PK::Seq);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PPtr pstar(PPtr a) {
  auto p = mkp(PK::Star);
  p->a = std::move(a);
  return p;
}

PPtr pset0(std::vector<int> idx) {
  auto p = mkp(PK::Set0);
  p->idx = std::move(idx);
  return p;
}

PPtr pfirst(PPtr a) {
  auto p = mkp(PK::First);
  p->a = std::move(a);
  return p;
}

bool equal(const FPtr& a, const FPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k || a->c != b->c || a->i != b->i || a->j != b->j ||
      a->var != b->var || a->idx != b->idx)
    return false;
  return equal(a->a, b->a) && equal(a->b, b->b) && equal(a->p, b->p);
}

bool equal(const PPtr& a, const PPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k || a->gate != b->gate || a->idx != b->idx) return false;
  return equal(a->a, b->a) && equal(a->b, b->b) && equal(a->f, b->f);
}

bool contains_trivial(const PPtr& p) {
  if (!p) return false;
  if (p->k == PK::Trivial) return true;
  return contains_trivial(p->a) || contains_trivial(p->b);
}

}  // namespace lqp
