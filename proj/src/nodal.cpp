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

#include "lqp/nodal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqp {

namespace {

/// Normalizes one cell; false means the cell is empty and must be dropped.
bool normalize_cell(Cell& c) {
  if (c.pos.is_zero()) return false;
  std::vector<Subspace> negs;
  for (const Subspace& raw : c.negs) {
    Subspace n = subspace_leq(raw, c.pos) ? raw : meet(raw, c.pos);
    if (n.is_zero()) continue;
    if (n.dim() == c.pos.dim()) return false;  // covers every ray of pos
    negs.push_back(std::move(n));
  }
  // Keep only maximal negs: excluding a larger subspace already excludes
  // the smaller one.
  std::vector<Subspace> kept;
  for (size_t a = 0; a < negs.size(); ++a) {
    bool subsumed = false;
    for (size_t b = 0; b < negs.size() && !subsumed; ++b) {
      if (a == b) continue;
      if (negs[a] == negs[b]) {
        subsumed = b < a;  // drop duplicates once
      } else if (subspace_leq(negs[a], negs[b])) {
        subsumed = true;
      }
    }
    if (!subsumed) kept.push_back(negs[a]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Subspace& x, const Subspace& y) { return cmp(x, y) < 0; });
  c.negs = std::move(kept);
  return true;
}

std::vector<Cell> normalize_cells(std::vector<Cell> cells) {
  std::vector<Cell> out;
  for (Cell& c : cells) {
    if (!normalize_cell(c)) continue;
    bool dup = false;
    for (const Cell& prev : out)
      if (prev.pos == c.pos && prev.negs == c.negs) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

bool cell_nonempty(const Cell& c) {
  if (c.pos.is_zero()) return false;
  for (const Subspace& n : c.negs) {
    Subspace m = meet(n, c.pos);
    if (m.dim() == c.pos.dim()) return false;
  }
  return true;
}

NodalSet NodalSet::empty(size_t ambient) { return NodalSet(ambient, {}); }

NodalSet NodalSet::full(size_t ambient) {
  return of_subspace(Subspace::full(ambient));
}

NodalSet NodalSet::of_subspace(const Subspace& w) {
  std::vector<Cell> cells;
  if (!w.is_zero()) cells.push_back({w, {}});
  return NodalSet(w.ambient(), std::move(cells));
}

NodalSet NodalSet::of_cells(std::vector<Cell> cells, size_t ambient) {
  for (const Cell& c : cells)
    if (c.pos.ambient() != ambient)
      throw std::invalid_argument("cell ambient mismatch");
  return NodalSet(ambient, normalize_cells(std::move(cells)));
}

bool NodalSet::member(const Ray& r) const {
  for (const Cell& c : cells_) {
    if (!c.pos.contains(r)) continue;
    bool excluded = false;
    for (const Subspace& n : c.negs)
      if (n.contains(r)) {
        excluded = true;
        break;
      }
    if (!excluded) return true;
  }
  return false;
}

NodalSet nunion(const NodalSet& a, const NodalSet& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("nodal ambient mismatch");
  std::vector<Cell> cells = a.cells_;
  cells.insert(cells.end(), b.cells_.begin(), b.cells_.end());
  return NodalSet::of_cells(std::move(cells), a.ambient_);
}

NodalSet nintersect(const NodalSet& a, const NodalSet& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("nodal ambient mismatch");
  std::vector<Cell> cells;
  for (const Cell& x : a.cells_) {
    for (const Cell& y : b.cells_) {
      Cell c{meet(x.pos, y.pos), x.negs};
      c.negs.insert(c.negs.end(), y.negs.begin(), y.negs.end());
      cells.push_back(std::move(c));
    }
  }
  return NodalSet::of_cells(std::move(cells), a.ambient_);
}

NodalSet ncomplement(const NodalSet& a) {
  // Complement of one cell (P, {N_i}): rays outside P, plus rays inside
  // some N_i. Complement of the union is the intersection of those.
  NodalSet acc = NodalSet::full(a.ambient_);
  for (const Cell& c : a.cells_) {
    std::vector<Cell> parts;
    parts.push_back({Subspace::full(a.ambient_), {c.pos}});
    for (const Subspace& n : c.negs) parts.push_back({n, {}});
    acc = nintersect(acc, NodalSet::of_cells(std::move(parts), a.ambient_));
  }
  return acc;
}

NodalSet ndifference(const NodalSet& a, const NodalSet& b) {
  return nintersect(a, ncomplement(b));
}

bool nodal_equal(const NodalSet& a, const NodalSet& b) {
  return ndifference(a, b).is_empty() && ndifference(b, a).is_empty();
}

Subspace NodalSet::closure() const {
  Subspace w = Subspace::zero(ambient_);
  for (const Cell& c : cells_) w = join(w, c.pos);
  return w;
}

std::string to_string(const NodalSet& a) {
  if (a.is_empty()) return "{}";
  std::string s;
  for (size_t k = 0; k < a.cells().size(); ++k) {
    const Cell& c = a.cells()[k];
    if (k) s += " u ";
    s += to_string(c.pos);
    for (const Subspace& n : c.negs) s += " \\ " + to_string(n);
  }
  return s;
}

}  // namespace lqp
