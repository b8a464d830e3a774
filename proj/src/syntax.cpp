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

#include "lqp/syntax.hpp"

#include <algorithm>
#include <stdexcept>

#include "lqp/error.hpp"

namespace lqp {

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Formula levels: 0 '->', 1 '\/', 2 '(+)', 3 '&', 4 prefix, 5 atom.
// Program levels: 0 '+', 1 ';', 2 postfix '*', 3 primary.

std::string idx_list(const std::vector<int>& idx) {
  std::string s;
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s;
}

std::string print_f(const FPtr& f, int level);
std::string print_p(const PPtr& p, int level);

std::string wrap(std::string s, bool parens) {
  return parens ? "(" + std::move(s) + ")" : std::move(s);
}

int f_level(const FPtr& f) {
  switch (f->k) {
    case FK::Implies: return 0;
    case FK::Or: return 1;
    case FK::QJoin: return 2;
    case FK::And: return 3;
    case FK::Not:
    case FK::Ortho:
    case FK::MeasBox:
    case FK::MeasDia:
    case FK::Box:
    case FK::Dia:
    case FK::PostDia:
      return 4;
    default: return 5;
  }
}

std::string print_f(const FPtr& f, int level) {
  int mine = f_level(f);
  switch (f->k) {
    case FK::Const:
      return std::string(1, f->c) + "_" + std::to_string(f->i);
    case FK::Var:
      if (f->idx.empty()) return f->var;
      return f->var + "_{" + idx_list(f->idx) + "}";
    case FK::Entangle:
      return "E[" + print_p(f->p, 0) + "](" + std::to_string(f->i) + "," +
             std::to_string(f->j) + ")";
    case FK::Verum: return "true";
    case FK::Falsum: return "false";
    case FK::Not:
      return wrap("!" + print_f(f->a, 4), mine < level);
    case FK::Ortho:
      return wrap("~" + print_f(f->a, 4), mine < level);
    case FK::MeasBox:
      return wrap("box " + print_f(f->a, 4), mine < level);
    case FK::MeasDia:
      return wrap("dia " + print_f(f->a, 4), mine < level);
    case FK::Box:
      return wrap("[" + print_p(f->p, 0) + "] " + print_f(f->a, 4),
                  mine < level);
    case FK::Dia:
      return wrap("<" + print_p(f->p, 0) + "> " + print_f(f->a, 4),
                  mine < level);
    case FK::PostDia:
      return wrap("post<" + print_p(f->p, 0) + "> " + print_f(f->a, 4),
                  mine < level);
    case FK::And:
      return wrap(print_f(f->a, 3) + " & " + print_f(f->b, 4), mine < level);
    case FK::QJoin:
      return wrap(print_f(f->a, 2) + " (+) " + print_f(f->b, 3), mine < level);
    case FK::Or:
      return wrap(print_f(f->a, 1) + " \\/ " + print_f(f->b, 2), mine < level);
    case FK::Implies:
      return wrap(print_f(f->a, 1) + " -> " + print_f(f->b, 0), mine < level);
  }
  throw std::logic_error("unreachable formula kind");
}

std::string print_p(const PPtr& p, int level) {
  switch (p->k) {
    case PK::Trivial: return "top";
    case PK::Gate:
      if (p->idx.size() == 1) return p->gate + "_" + std::to_string(p->idx[0]);
      return p->gate + "_{" + idx_list(p->idx) + "}";
    case PK::Adjoint: return "adj(" + print_p(p->a, 0) + ")";
    case PK::Set0: return "set0(" + idx_list(p->idx) + ")";
    case PK::First: return "first(" + print_p(p->a, 0) + ")";
    case PK::Test:
      // Compound test arguments are parenthesized so '?' visibly binds to
      // the whole formula.
      return print_f(p->f, 6) + "?";
    case PK::Star:
      return wrap(print_p(p->a, 3) + "*", 2 < level);
    case PK::Seq:
      return wrap(print_p(p->a, 1) + "; " + print_p(p->b, 2), 1 < level);
    case PK::Choice:
      return wrap(print_p(p->a, 0) + " + " + print_p(p->b, 1), 0 < level);
  }
  throw std::logic_error("unreachable program kind");
}

}  // namespace

std::string print(const FPtr& f) { return print_f(f, 0); }
std::string print(const PPtr& p) { return print_p(p, 0); }

// ---------------------------------------------------------------------------
// Desugaring
// ---------------------------------------------------------------------------

namespace {

/// Negation with double-negation collapse (an exact set identity for the
/// complement semantics, so denotations are unaffected).
FPtr mknot(const FPtr& a) {
  if (a->k == FK::Not) return a->a;
  return fnot(a);
}

FPtr falsum_core() { return fand(fconst('1', 1), fnot(fconst('1', 1))); }
FPtr not_verum_core() { return fand(fnot(fconst('1', 1)), fconst('1', 1)); }

/// ~x in core form, via the identity ~x = [x?]false.
FPtr ortho_core(const FPtr& x) { return fbox(ptest(x), falsum_core()); }

}  // namespace

FPtr desugar(const FPtr& f, int n) {
  switch (f->k) {
    case FK::Const:
      return f;
    case FK::Var: {
      if (!f->idx.empty()) return f;
      std::vector<int> all(n);
      for (int q = 1; q <= n; ++q) all[q - 1] = q;
      return fvar(f->var, std::move(all));
    }
    case FK::Entangle:
      return fent(desugar(f->p, n), f->i, f->j);
    case FK::Not:
      return mknot(desugar(f->a, n));
    case FK::And:
      return fand(desugar(f->a, n), desugar(f->b, n));
    case FK::Box:
      return fbox(desugar(f->p, n), desugar(f->a, n));
    case FK::Or:
      return mknot(fand(mknot(desugar(f->a, n)), mknot(desugar(f->b, n))));
    case FK::Implies:
      return mknot(fand(desugar(f->a, n), mknot(desugar(f->b, n))));
    case FK::QJoin:
      return ortho_core(fand(ortho_core(desugar(f->a, n)),
                             ortho_core(desugar(f->b, n))));
    case FK::Verum:
      return mknot(not_verum_core());
    case FK::Falsum:
      return falsum_core();
    case FK::Dia:
      return mknot(fbox(desugar(f->p, n), mknot(desugar(f->a, n))));
    case FK::PostDia:
      // post<pi>phi = ~[adj(pi)]~phi
      return ortho_core(
          fbox(padj(desugar(f->p, n)), ortho_core(desugar(f->a, n))));
    case FK::MeasDia:
      return mknot(fbox(ptest(desugar(f->a, n)), not_verum_core()));
    case FK::MeasBox:
      return fbox(ptest(mknot(desugar(f->a, n))), not_verum_core());
    case FK::Ortho:
      return ortho_core(desugar(f->a, n));
  }
  throw std::logic_error("unreachable formula kind");
}

PPtr desugar(const PPtr& p, int n) {
  switch (p->k) {
    case PK::Trivial:
    case PK::Gate:
      return p;
    case PK::Test:
      return ptest(desugar(p->f, n));
    case PK::Adjoint:
      return padj(desugar(p->a, n));
    case PK::Choice:
      return pchoice(desugar(p->a, n), desugar(p->b, n));
    case PK::Seq:
      return pseq(desugar(p->a, n), desugar(p->b, n));
    case PK::Star:
      return pstar(desugar(p->a, n));
    case PK::Set0: {
      PPtr out;
      for (int i : p->idx) {
        // 0_i! = 0_i? u (1_i?; X_i)
        PPtr reset = pchoice(ptest(fconst('0', i)),
                             pseq(ptest(fconst('1', i)), pgate("X", {i})));
        out = out ? pseq(out, reset) : reset;
      }
      if (!out) throw LqpError(Err::Arity, "set0 needs at least one index");
      return out;
    }
    case PK::First: {
      PPtr body = desugar(p->a, n);
      if (n == 1) return body;
      std::vector<int> rest;
      for (int q = 2; q <= n; ++q) rest.push_back(q);
      FPtr zeros;
      for (int q : rest) {
        FPtr z = fconst('0', q);
        zeros = zeros ? fand(zeros, z) : z;
      }
      return pseq(pseq(desugar(pset0(rest), n), body), ptest(zeros));
    }
  }
  throw std::logic_error("unreachable program kind");
}

// ---------------------------------------------------------------------------
// Adjoint normalization
// ---------------------------------------------------------------------------

namespace {

PPtr norm_adj(const PPtr& x);

PPtr norm(const PPtr& p) {
  switch (p->k) {
    case PK::Trivial:
    case PK::Gate:
    case PK::Test:
    case PK::Set0:
      return p;
    case PK::Adjoint:
      return norm_adj(p->a);
    case PK::Choice:
      return pchoice(norm(p->a), norm(p->b));
    case PK::Seq:
      return pseq(norm(p->a), norm(p->b));
    case PK::Star:
      return pstar(norm(p->a));
    case PK::First:
      return pfirst(norm(p->a));
  }
  throw std::logic_error("unreachable program kind");
}

/// Normal form of x^dag.
PPtr norm_adj(const PPtr& x) {
  switch (x->k) {
    case PK::Trivial:
      return x;  // the universal relation is symmetric
    case PK::Test:
      return x;  // projectors are self-adjoint
    case PK::Gate:
      return padj(x);
    case PK::Adjoint:
      return norm(x->a);
    case PK::Seq:
      return pseq(norm_adj(x->b), norm_adj(x->a));
    case PK::Choice:
      return pchoice(norm_adj(x->a), norm_adj(x->b));
    case PK::Star:
      return pstar(norm_adj(x->a));
    case PK::Set0:
    case PK::First:
      throw LqpError(Err::Arity, "adjoint normalization needs desugared input");
  }
  throw std::logic_error("unreachable program kind");
}

}  // namespace

PPtr normalize_adjoint(const PPtr& p) { return norm(p); }

FPtr normalize_adjoint_deep(const FPtr& f) {
  if (!f) return f;
  auto g = std::make_shared<Formula>(*f);
  g->a = normalize_adjoint_deep(f->a);
  g->b = normalize_adjoint_deep(f->b);
  if (f->p) g->p = normalize_adjoint_deep(f->p);
  return g;
}

PPtr normalize_adjoint_deep(const PPtr& p) {
  if (!p) return p;
  auto deep = [](const PPtr& q, auto&& self) -> PPtr {
    if (!q) return q;
    auto r = std::make_shared<Program>(*q);
    r->a = self(q->a, self);
    r->b = self(q->b, self);
    if (q->f) r->f = normalize_adjoint_deep(q->f);
    return r;
  };
  return norm(deep(p, deep));
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

bool is_const(const FPtr& f, char c, int i) {
  return f->k == FK::Const && f->c == c && f->i == i;
}

/// The desugared falsum: a constant conjoined with its own negation.
bool is_falsum_pattern(const FPtr& f) {
  if (f->k == FK::Falsum) return true;
  if (f->k != FK::And) return false;
  const FPtr& a = f->a;
  const FPtr& b = f->b;
  if (a->k == FK::Const && b->k == FK::Not && is_const(b->a, a->c, a->i))
    return true;
  if (b->k == FK::Const && a->k == FK::Not && is_const(a->a, b->c, b->i))
    return true;
  return false;
}

bool testable(const FPtr& f) {
  switch (f->k) {
    case FK::Const:
    case FK::Entangle:
    case FK::Falsum:
      return true;
    case FK::And:
      return is_falsum_pattern(f) || (testable(f->a) && testable(f->b));
    case FK::Box:
      return classify(f->p).deterministic && testable(f->a);
    default:
      return false;
  }
}

bool deterministic(const PPtr& p) {
  switch (p->k) {
    case PK::Choice:
    case PK::Star:
    case PK::Set0:   // expands to a choice
      return false;
    case PK::First:
      return false;  // expands through set0
    case PK::Seq:
      return deterministic(p->a) && deterministic(p->b);
    case PK::Adjoint:
      return deterministic(p->a);
    default:
      return true;  // top, tests, gates
  }
}

using Loc = std::optional<std::set<int>>;

Loc merge(const Loc& a, const Loc& b) {
  if (!a || !b) return std::nullopt;
  std::set<int> u = *a;
  u.insert(b->begin(), b->end());
  return u;
}

Loc floc(const FPtr& f);
Loc ploc(const PPtr& p);

/// Conjunction patterns of the local grammar, tried with a as the anchor:
/// local & local, local & !local, local & [local]local.
Loc and_pattern(const FPtr& a, const FPtr& b) {
  Loc la = floc(a);
  if (!la) return std::nullopt;
  if (Loc lb = floc(b)) return merge(la, lb);
  if (b->k == FK::Not) {
    if (Loc lc = floc(b->a)) return merge(la, lc);
  }
  if (b->k == FK::Box) {
    Loc lp = ploc(b->p);
    Loc lc = floc(b->a);
    if (lp && lc) return merge(la, merge(lp, lc));
  }
  return std::nullopt;
}

Loc floc(const FPtr& f) {
  switch (f->k) {
    case FK::Const:
      return std::set<int>{f->i};
    case FK::Var: {
      std::set<int> s(f->idx.begin(), f->idx.end());
      return s;
    }
    case FK::Entangle:
      // The embedded program names an abstract single-qubit map; only the
      // endpoints are indices of the compound system.
      return std::set<int>{f->i, f->j};
    case FK::And: {
      if (Loc l = and_pattern(f->a, f->b)) return l;
      return and_pattern(f->b, f->a);
    }
    case FK::Or:
      return merge(floc(f->a), floc(f->b));
    case FK::Not:
      // Disjunctions desugar to !(!a & !b); recognize that shape so the
      // grammar's local disjunction survives desugaring.
      if (f->a->k == FK::And && f->a->a->k == FK::Not &&
          f->a->b->k == FK::Not)
        return merge(floc(f->a->a->a), floc(f->a->b->a));
      return std::nullopt;
    case FK::Falsum:
      return std::set<int>{1};
    default:
      return std::nullopt;
  }
}

Loc ploc(const PPtr& p) {
  switch (p->k) {
    case PK::Gate: {
      std::set<int> s(p->idx.begin(), p->idx.end());
      return s;
    }
    case PK::Test:
      return floc(p->f);
    case PK::Seq:
    case PK::Choice:
      return merge(ploc(p->a), ploc(p->b));
    case PK::Star:
    case PK::Adjoint:
      return ploc(p->a);
    case PK::Set0: {
      std::set<int> s(p->idx.begin(), p->idx.end());
      return s;
    }
    default:
      return std::nullopt;  // top, first
  }
}

}  // namespace

FormulaClass classify(const FPtr& f) {
  FormulaClass c;
  c.testable = testable(f);
  c.locality = floc(f);
  return c;
}

ProgramClass classify(const PPtr& p) {
  ProgramClass c;
  c.deterministic = deterministic(p);
  c.locality = ploc(p);
  return c;
}

// ---------------------------------------------------------------------------
// Relabeling
// ---------------------------------------------------------------------------

namespace {

struct IndexMap {
  std::vector<int> from, to;
  int map(int i) const {
    for (size_t k = 0; k < from.size(); ++k)
      if (from[k] == i) return to[k];
    return i;
  }
  std::vector<int> map(const std::vector<int>& idx) const {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(map(i));
    return out;
  }
};

FPtr sub(const FPtr& f, const IndexMap& m);

PPtr sub(const PPtr& p, const IndexMap& m) {
  if (!p) return p;
  auto q = std::make_shared<Program>(*p);
  q->idx = m.map(p->idx);
  q->a = sub(p->a, m);
  q->b = sub(p->b, m);
  if (p->f) q->f = sub(p->f, m);
  return q;
}

FPtr sub(const FPtr& f, const IndexMap& m) {
  if (!f) return f;
  auto g = std::make_shared<Formula>(*f);
  switch (f->k) {
    case FK::Const:
      g->i = m.map(f->i);
      return g;
    case FK::Var:
      g->idx = m.map(f->idx);
      return g;
    case FK::Entangle:
      g->i = m.map(f->i);
      g->j = m.map(f->j);
      return g;  // embedded program untouched
    default:
      g->a = sub(f->a, m);
      g->b = sub(f->b, m);
      if (f->p) g->p = sub(f->p, m);
      return g;
  }
}

IndexMap check_relabel(const std::vector<int>& from,
                       const std::vector<int>& to, const Loc& locality) {
  if (from.size() != to.size())
    throw LqpError(Err::Arity, "relabeling index lists differ in length");
  for (size_t a = 0; a < from.size(); ++a)
    for (size_t b = a + 1; b < from.size(); ++b)
      if (from[a] == from[b] || to[a] == to[b])
        throw LqpError(Err::Arity, "relabeling index lists must be duplicate-free");
  if (!locality)
    throw LqpError(Err::Arity, "relabeling requires a local formula or program");
  for (int i : *locality)
    if (std::find(from.begin(), from.end(), i) == from.end())
      throw LqpError(Err::Arity,
                     "argument is not local in the source index list (uses qubit " +
                         std::to_string(i) + ")");
  return IndexMap{from, to};
}

}  // namespace

FPtr relabel(const FPtr& f, const std::vector<int>& from,
             const std::vector<int>& to) {
  return sub(f, check_relabel(from, to, classify(f).locality));
}

PPtr relabel(const PPtr& p, const std::vector<int>& from,
             const std::vector<int>& to) {
  return sub(p, check_relabel(from, to, classify(p).locality));
}

}  // namespace lqp
