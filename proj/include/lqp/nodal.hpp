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

#ifndef LQP_NODAL_HPP
#define LQP_NODAL_HPP

#include <vector>

#include "lqp/linalg.hpp"

namespace lqp {

/// One cell of a definable set of states: the rays inside `pos` that lie in
/// none of the `negs`. Normalized so each neg is intersected with pos, is
/// nonzero, and no neg contains another.
struct Cell {
  Subspace pos;
  std::vector<Subspace> negs;
};

/// Raw (pre-normalization) nonemptiness: pos has rays and every neg is a
/// proper subspace of pos. Sound because a vector space over an infinite
/// field is never a finite union of proper subspaces.
bool cell_nonempty(const Cell& c);

/// A finite union of cells: the computable representation of every formula
/// denotation. Closed under union, intersection, complement, difference.
class NodalSet {
 public:
  static NodalSet empty(size_t ambient);
  static NodalSet full(size_t ambient);
  static NodalSet of_subspace(const Subspace& w);
  static NodalSet of_cells(std::vector<Cell> cells, size_t ambient);

  size_t ambient() const { return ambient_; }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Normalization drops empty cells, so emptiness is syntactic.
  bool is_empty() const { return cells_.empty(); }

  bool member(const Ray& r) const;

  friend NodalSet nunion(const NodalSet& a, const NodalSet& b);
  friend NodalSet nintersect(const NodalSet& a, const NodalSet& b);
  friend NodalSet ncomplement(const NodalSet& a);
  friend NodalSet ndifference(const NodalSet& a, const NodalSet& b);

  /// Extensional equality, decided by two empty differences.
  friend bool nodal_equal(const NodalSet& a, const NodalSet& b);

  /// Biorthogonal closure: the join of the cell subspaces (removing
  /// finitely many proper subspaces leaves a spanning set, so each cell
  /// spans its pos).
  Subspace closure() const;

 private:
  NodalSet(size_t ambient, std::vector<Cell> cells)
      : ambient_(ambient), cells_(std::move(cells)) {}
  size_t ambient_;
  std::vector<Cell> cells_;
};

std::string to_string(const NodalSet& a);

}  // namespace lqp

#endif
