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

#include "lqp/checker.hpp"

#include <set>

#include "lqp/error.hpp"
#include "lqp/syntax.hpp"

namespace lqp {

namespace {

Vec const_vec(char c) {
  switch (c) {
    case '0': return Vec{1, 0};
    case '1': return Vec{0, 1};
    case '+': return Vec{1, 1};
    case '-': return Vec{1, -1};
  }
  throw std::logic_error("unknown constant");
}

/// Union leaves of a choice tree.
void choice_leaves(const PPtr& p, std::vector<PPtr>& out) {
  if (p->k == PK::Choice) {
    choice_leaves(p->a, out);
    choice_leaves(p->b, out);
  } else {
    out.push_back(p);
  }
}

[[noreturn]] void fragment_error(const std::string& what) {
  throw LqpError(Err::Fragment, what);
}

}  // namespace

FPtr prepare(const FPtr& f, const Model& m) {
  validate_ast(f, m);
  return normalize_adjoint_deep(desugar(f, m.n));
}

PPtr prepare(const PPtr& p, const Model& m) {
  validate_ast(p, m);
  return normalize_adjoint_deep(desugar(p, m.n));
}

// ---------------------------------------------------------------------------
// Symbolic denotation
// ---------------------------------------------------------------------------

NodalSet denote(const FPtr& f, const Model& m) {
  size_t dim = m.dim();
  switch (f->k) {
    case FK::Const:
      return NodalSet::of_subspace(
          local_state_property(const_vec(f->c), {f->i}, m.n));
    case FK::Var: {
      const Subspace& val = m.valuation.at(f->var);
      if (val.is_zero()) return NodalSet::empty(dim);
      if (static_cast<int>(f->idx.size()) == m.n) {
        // A full-arity variable only permutes the declared subspace.
        std::vector<Vec> rows;
        Vec unit(1);
        unit[0] = 1;
        for (const Vec& b : val.basis())
          rows.push_back(mu_tensor(b, unit, f->idx, m.n));
        return NodalSet::of_subspace(Subspace::span(rows, dim));
      }
      if (val.dim() == 1)
        return NodalSet::of_subspace(
            local_state_property(val.basis()[0], f->idx, m.n));
      fragment_error("variable '" + f->var +
                     "' denotes a separation property (arity below the model "
                     "with dim > 1) and has no symbolic representation");
    }
    case FK::Entangle: {
      std::vector<PPtr> leaves;
      choice_leaves(f->p, leaves);
      NodalSet acc = NodalSet::empty(dim);
      for (const PPtr& leaf : leaves) {
        if (leaf->k == PK::Trivial)
          fragment_error("E[top] is the separation property; it is decidable "
                         "only pointwise");
        Mat mat;
        try {
          mat = denote_deterministic(leaf, m);
        } catch (const LqpError& e) {
          if (e.code() == Err::Nondet)
            fragment_error("entanglement atom over non-deterministic program '" +
                           print(leaf) + "'");
          throw;
        }
        acc = nunion(acc, NodalSet::of_subspace(
                              entangled_property(mat, f->i, f->j, m.n)));
      }
      return acc;
    }
    case FK::Not:
      return ncomplement(denote(f->a, m));
    case FK::And:
      return nintersect(denote(f->a, m), denote(f->b, m));
    case FK::Box:
      return wp(f->p, denote(f->a, m), m);
    default:
      throw std::logic_error("denote expects a desugared formula");
  }
}

Mat denote_deterministic(const PPtr& p, const Model& m) {
  switch (p->k) {
    case PK::Trivial:
    case PK::Choice:
    case PK::Star:
      throw LqpError(Err::Nondet,
                     "program '" + print(p) + "' is not deterministic");
    case PK::Gate:
      return lift_local(m.gate(p->gate).m, p->idx, m.n);
    case PK::Adjoint:
      if (p->a->k != PK::Gate)
        throw std::logic_error("denote_deterministic expects normalized adjoints");
      return lift_local(m.gate(p->a->gate).m.adjoint(), p->a->idx, m.n);
    case PK::Test:
      return projector_matrix(denote(p->f, m).closure());
    case PK::Seq:
      // left-to-right execution: the right matrix is applied second
      return denote_deterministic(p->b, m) * denote_deterministic(p->a, m);
    default:
      throw std::logic_error("denote_deterministic expects desugared input");
  }
}

// ---------------------------------------------------------------------------
// Weakest preconditions
// ---------------------------------------------------------------------------

namespace {

/// Image of a nodal set under an invertible ray map (cellwise).
NodalSet nodal_image(const Mat& inv, const NodalSet& post) {
  std::vector<Cell> cells;
  for (const Cell& c : post.cells()) {
    Cell out{image(inv, c.pos), {}};
    for (const Subspace& n : c.negs) out.negs.push_back(image(inv, n));
    cells.push_back(std::move(out));
  }
  return NodalSet::of_cells(std::move(cells), post.ambient());
}

/// Preimage of a subspace under the projector onto w:
/// {x : P_w(x) in v} = (v /\ w) + w-orthocomplement.
Subspace projector_preimage(const Subspace& v, const Subspace& w,
                            const Subspace& wperp) {
  return join(meet(v, w), wperp);
}

}  // namespace

NodalSet wp(const PPtr& p, const NodalSet& post, const Model& m) {
  switch (p->k) {
    case PK::Trivial:
      // [top]post holds everywhere when post is everything, nowhere else.
      return ncomplement(post).is_empty() ? NodalSet::full(m.dim())
                                          : NodalSet::empty(m.dim());
    case PK::Gate:
      return nodal_image(
          lift_local(m.gate(p->gate).inverse_ray_map(), p->idx, m.n), post);
    case PK::Adjoint: {
      if (p->a->k != PK::Gate)
        throw std::logic_error("wp expects normalized adjoints");
      // inverse of the adjoint ray map is the gate itself
      return nodal_image(lift_local(m.gate(p->a->gate).m, p->a->idx, m.n),
                         post);
    }
    case PK::Test: {
      Subspace w = denote(p->f, m).closure();
      Subspace wperp = orthocomplement(w);
      std::vector<Cell> cells;
      if (!wperp.is_zero()) cells.push_back({wperp, {}});  // vacuous states
      for (const Cell& c : post.cells()) {
        Cell out{projector_preimage(c.pos, w, wperp), {}};
        for (const Subspace& n : c.negs)
          out.negs.push_back(projector_preimage(n, w, wperp));
        if (!wperp.is_zero()) out.negs.push_back(wperp);
        cells.push_back(std::move(out));
      }
      return NodalSet::of_cells(std::move(cells), m.dim());
    }
    case PK::Seq:
      return wp(p->a, wp(p->b, post, m), m);
    case PK::Choice:
      return nintersect(wp(p->a, post, m), wp(p->b, post, m));
    case PK::Star:
      return star_fixpoint(p->a, post, m);
    default:
      throw std::logic_error("wp expects desugared input");
  }
}

NodalSet star_fixpoint(const PPtr& p, const NodalSet& post, const Model& m) {
  NodalSet x = post;
  for (int iter = 0; iter < m.star_bound; ++iter) {
    NodalSet next = nintersect(post, wp(p, x, m));
    if (nodal_equal(next, x)) return x;
    x = std::move(next);
  }
  throw LqpError(Err::StarBound,
                 "iteration of '" + print(p) + "*' did not stabilize within " +
                     std::to_string(m.star_bound) + " steps");
}

// ---------------------------------------------------------------------------
// Pointwise evaluation
// ---------------------------------------------------------------------------

std::vector<Ray> successors(const Ray& s, const PPtr& p, const Model& m) {
  switch (p->k) {
    case PK::Trivial:
      throw LqpError(Err::Top,
                     "the trivial program has no finite successor set");
    case PK::Gate: {
      auto t = apply_to_ray(lift_local(m.gate(p->gate).m, p->idx, m.n), s);
      return {*t};  // gates are total on rays
    }
    case PK::Adjoint: {
      if (p->a->k != PK::Gate)
        throw std::logic_error("successors expects normalized adjoints");
      auto t = apply_to_ray(
          lift_local(m.gate(p->a->gate).m.adjoint(), p->a->idx, m.n), s);
      return {*t};
    }
    case PK::Test: {
      Subspace w = denote(p->f, m).closure();
      auto t = project_ray(w, s);
      if (!t) return {};
      return {*t};
    }
    case PK::Seq: {
      std::set<Ray> out;
      for (const Ray& mid : successors(s, p->a, m))
        for (const Ray& t : successors(mid, p->b, m)) out.insert(t);
      return {out.begin(), out.end()};
    }
    case PK::Choice: {
      std::set<Ray> out;
      for (const Ray& t : successors(s, p->a, m)) out.insert(t);
      for (const Ray& t : successors(s, p->b, m)) out.insert(t);
      return {out.begin(), out.end()};
    }
    case PK::Star: {
      // breadth-first orbit with a visited set
      std::set<Ray> visited{s};
      std::vector<Ray> frontier{s};
      for (int iter = 0; iter < m.star_bound; ++iter) {
        std::vector<Ray> next;
        for (const Ray& cur : frontier)
          for (const Ray& t : successors(cur, p->a, m))
            if (visited.insert(t).second) next.push_back(t);
        if (next.empty()) return {visited.begin(), visited.end()};
        frontier = std::move(next);
      }
      throw LqpError(Err::StarBound,
                     "orbit of '" + print(p) + "' still growing after " +
                         std::to_string(m.star_bound) + " steps");
    }
    default:
      throw std::logic_error("successors expects desugared input");
  }
}

bool holds_at(const Ray& s, const FPtr& f, const Model& m) {
  switch (f->k) {
    case FK::Const: {
      auto local = factor_at(s, {f->i}, m.n);
      return local && *local == Ray::of(const_vec(f->c));
    }
    case FK::Var: {
      const Subspace& val = m.valuation.at(f->var);
      auto local = factor_at(s, f->idx, m.n);
      return local && val.contains(*local);
    }
    case FK::Entangle: {
      std::vector<PPtr> leaves;
      choice_leaves(f->p, leaves);
      for (const PPtr& leaf : leaves) {
        if (leaf->k == PK::Trivial) {
          if (factor_at(s, {f->i, f->j}, m.n)) return true;
        } else {
          Mat mat;
          try {
            mat = denote_deterministic(leaf, m);
          } catch (const LqpError& e) {
            if (e.code() == Err::Nondet)
              throw LqpError(Err::Fragment,
                             "entanglement atom over non-deterministic program '" +
                                 print(leaf) + "'");
            throw;
          }
          if (entangled_property(mat, f->i, f->j, m.n).contains(s)) return true;
        }
      }
      return false;
    }
    case FK::Not:
      return !holds_at(s, f->a, m);
    case FK::And:
      return holds_at(s, f->a, m) && holds_at(s, f->b, m);
    case FK::Box: {
      if (contains_trivial(f->p)) {
        // the trivial program quantifies over all states; go symbolic
        return wp(f->p, denote(f->a, m), m).member(s);
      }
      for (const Ray& t : successors(s, f->p, m))
        if (!holds_at(t, f->a, m)) return false;
      return true;
    }
    default:
      throw std::logic_error("holds_at expects a desugared formula");
  }
}

// ---------------------------------------------------------------------------
// Decisions and witnesses
// ---------------------------------------------------------------------------

Ray witness(const NodalSet& a) {
  if (a.is_empty()) throw std::logic_error("witness of an empty set");
  const Cell& c = a.cells().front();
  const std::vector<Vec>& basis = c.pos.basis();
  for (long t = 0;; ++t) {
    Vec v = basis[0];
    GaussianRational power(1);
    for (size_t k = 1; k < basis.size(); ++k) {
      power = power * GaussianRational(t);
      v = v + power * basis[k];
    }
    Ray r = Ray::of(v);
    bool excluded = false;
    for (const Subspace& n : c.negs)
      if (n.contains(r)) {
        excluded = true;
        break;
      }
    if (!excluded) return r;
    if (basis.size() == 1)
      throw std::logic_error("normalized cell with a covering neg");
  }
}

Verdict decide_valid(const FPtr& f, const Model& m) {
  NodalSet counter = ncomplement(denote(prepare(f, m), m));
  Verdict v;
  v.value = counter.is_empty();
  if (!v.value) v.witness = witness(counter);
  return v;
}

Verdict decide_sat(const FPtr& f, const Model& m) {
  NodalSet d = denote(prepare(f, m), m);
  Verdict v;
  v.value = !d.is_empty();
  if (v.value) v.witness = witness(d);
  return v;
}

}  // namespace lqp
