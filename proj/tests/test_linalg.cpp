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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lqp/linalg.hpp"

using namespace lqp;

namespace {

GaussianRational gi(long re, long im = 0) {
  return {Rational(re), Rational(im)};
}

Vec v2(long a, long b) { return Vec{gi(a), gi(b)}; }
Vec v4(long a, long b, long c, long d) {
  return Vec{gi(a), gi(b), gi(c), gi(d)};
}

Mat mat2(long a, long b, long c, long d) {
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

Mat x_gate() { return mat2(0, 1, 1, 0); }
Mat h_gate() { return mat2(1, 1, 1, -1); }

Mat cnot_gate() {
  Mat m(4, 4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(3, 2) = 1;
  m.at(2, 3) = 1;
  return m;
}

// --- independent oracles -----------------------------------------------

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows * b.rows, a.cols * b.cols);
  for (size_t ar = 0; ar < a.rows; ++ar)
    for (size_t ac = 0; ac < a.cols; ++ac)
      for (size_t br = 0; br < b.rows; ++br)
        for (size_t bc = 0; bc < b.cols; ++bc)
          m.at(ar * b.rows + br, ac * b.cols + bc) = a.at(ar, ac) * b.at(br, bc);
  return m;
}

// Permutation matrix P with P |x_1...x_n> = |x_{perm^-1(1)}...>, built by
// explicitly moving tensor indices: source qubit position `from[t]` becomes
// target position t+1.
Mat perm_matrix(const std::vector<int>& from, int n) {
  size_t dim = size_t{1} << n;
  Mat p(dim, dim);
  for (size_t g = 0; g < dim; ++g) {
    size_t h = 0;
    for (int t = 0; t < n; ++t) {
      size_t bit = (g >> (n - from[t])) & 1;
      h |= bit << (n - 1 - t);
    }
    p.at(h, g) = 1;
  }
  return p;
}

// Oracle for lift_local: permute the indexed qubits to the front, apply
// op (x) identity there, and permute back.
Mat lift_oracle(const Mat& op, const std::vector<int>& idx, int n) {
  std::vector<int> order = idx;
  for (int q = 1; q <= n; ++q) {
    bool used = false;
    for (int u : idx) used = used || (u == q);
    if (!used) order.push_back(q);
  }
  Mat to_front = perm_matrix(order, n);
  size_t rest = size_t{1} << (n - static_cast<int>(idx.size()));
  Mat embedded = kron(op, Mat::identity(rest));
  return to_front.adjoint() * (embedded * to_front);
}

std::mt19937 rng(12345);

GaussianRational rand_scalar() {
  std::uniform_int_distribution<int> d(-3, 3);
  return gi(d(rng), d(rng));
}

Vec rand_vec(size_t dim) {
  while (true) {
    Vec v(dim);
    for (size_t k = 0; k < dim; ++k) v[k] = rand_scalar();
    if (!v.is_zero()) return v;
  }
}

Subspace rand_subspace(size_t dim) {
  std::uniform_int_distribution<int> d(1, 3);
  std::vector<Vec> vs;
  int count = d(rng);
  for (int k = 0; k < count; ++k) vs.push_back(rand_vec(dim));
  return Subspace::span(vs, dim);
}

}  // namespace

TEST_CASE("canonical spans") {
  // colinear inputs collapse
  Subspace s = Subspace::span({v2(1, 0), v2(2, 0)}, 2);
  CHECK(s.dim() == 1);
  CHECK(s.basis()[0] == v2(1, 0));
  // empty span is the zero space
  CHECK(Subspace::span({}, 2).is_zero());
  // an independent pair spans the plane, with the canonical basis
  Subspace t = Subspace::span({v2(1, 1), v2(1, -1)}, 2);
  CHECK(t == Subspace::full(2));
  CHECK(t.basis()[0] == v2(1, 0));
  CHECK(t.basis()[1] == v2(0, 1));
  // canonicalization is order-insensitive and idempotent
  Subspace u1 = Subspace::span({v2(1, 2), v2(3, 1)}, 2);
  Subspace u2 = Subspace::span({v2(3, 1), v2(1, 2)}, 2);
  CHECK(u1 == u2);
  CHECK(Subspace::span(u1.basis(), 2) == u1);
}

TEST_CASE("membership") {
  Subspace full = Subspace::span({v2(1, 0), v2(0, 1)}, 2);
  CHECK(full.contains(Ray::of(v2(1, 1))));
  Subspace line = Subspace::span({v2(1, 0)}, 2);
  CHECK_FALSE(line.contains(Ray::of(v2(1, 1))));
  Subspace bell = Subspace::span({v4(1, 0, 0, 1)}, 4);
  CHECK(bell.contains(Ray::of(v4(1, 0, 0, 1))));
  CHECK(bell.contains(Ray::of(v4(2, 0, 0, 2))));
}

TEST_CASE("meet and join") {
  Subspace e0 = Subspace::span({v2(1, 0)}, 2);
  Subspace e1 = Subspace::span({v2(0, 1)}, 2);
  Subspace diag = Subspace::span({v2(1, 1)}, 2);
  CHECK(meet(e0, e1).is_zero());
  CHECK(meet(e0, e0) == e0);
  CHECK(meet(Subspace::full(2), diag) == diag);
  CHECK(join(e0, e1) == Subspace::full(2));
  CHECK(join(e0, Subspace::zero(2)) == e0);
  CHECK(join(e0, diag) == Subspace::full(2));
}

TEST_CASE("orthocomplement") {
  CHECK(orthocomplement(Subspace::span({v2(1, 0)}, 2)) ==
        Subspace::span({v2(0, 1)}, 2));
  CHECK(orthocomplement(Subspace::zero(4)) == Subspace::full(4));
  Subspace w = orthocomplement(Subspace::span({v4(1, 0, 0, 1)}, 4));
  CHECK(w.dim() == 3);
  CHECK(w.contains(v4(0, 1, 0, 0)));
  CHECK(w.contains(v4(0, 0, 1, 0)));
  CHECK(w.contains(v4(1, 0, 0, -1)));
}

TEST_CASE("lattice laws on sampled subspaces") {
  for (int trial = 0; trial < 100; ++trial) {
    size_t dim = (trial % 2) ? 4 : 8;
    Subspace a = rand_subspace(dim), b = rand_subspace(dim),
             c = rand_subspace(dim);
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
    CHECK(join(a, join(b, c)) == join(join(a, b), c));
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    // complement: involution, order-reversal, dimension count
    Subspace ac = orthocomplement(a);
    CHECK(orthocomplement(ac) == a);
    CHECK(a.dim() + ac.dim() == dim);
    CHECK(meet(a, ac).is_zero());
    if (subspace_leq(a, b))
      CHECK(subspace_leq(orthocomplement(b), ac));
    CHECK(orthocomplement(meet(a, b)) == join(ac, orthocomplement(b)));
  }
}

TEST_CASE("preimages") {
  Subspace e0 = Subspace::span({v2(1, 0)}, 2);
  Subspace e1 = Subspace::span({v2(0, 1)}, 2);
  CHECK(preimage(x_gate(), e1) == e0);
  CHECK(preimage(x_gate(), Subspace::full(2)) == Subspace::full(2));
  CHECK(preimage(projector_matrix(e0), Subspace::zero(2)) == e1);

  for (int trial = 0; trial < 50; ++trial) {
    Mat m(4, 4);
    for (auto& x : m.a) x = rand_scalar();
    Subspace w = rand_subspace(4);
    Subspace pre = preimage(m, w);
    CHECK(subspace_leq(kernel(m), pre));
    // spot-check the defining property on the basis
    for (const Vec& b : pre.basis()) CHECK(w.contains(m.apply(b)));
  }
}

TEST_CASE("ray maps") {
  CHECK(*apply_to_ray(x_gate(), Ray::of(v2(1, 0))) == Ray::of(v2(0, 1)));
  Subspace e0 = Subspace::span({v2(1, 0)}, 2);
  CHECK_FALSE(apply_to_ray(projector_matrix(e0), Ray::of(v2(0, 1))));
  CHECK(*apply_to_ray(h_gate(), Ray::of(v2(1, 1))) == Ray::of(v2(1, 0)));
  // scaling the input leaves the output ray unchanged
  for (int trial = 0; trial < 50; ++trial) {
    Vec v = rand_vec(4);
    GaussianRational c = rand_scalar();
    if (c.is_zero()) continue;
    Mat m(4, 4);
    for (auto& x : m.a) x = rand_scalar();
    auto r1 = apply_to_ray(m, Ray::of(v));
    auto r2 = apply_to_ray(m, Ray::of(c * v));
    CHECK(r1.has_value() == r2.has_value());
    if (r1) CHECK(*r1 == *r2);
  }
}

TEST_CASE("lift_local against the tensor-permutation oracle") {
  // identity (x) X: |00> -> |01>, |10> -> |11>
  Mat m = lift_local(x_gate(), {2}, 2);
  CHECK(m.apply(basis_vec(4, 0)) == basis_vec(4, 1));
  CHECK(m.apply(basis_vec(4, 2)) == basis_vec(4, 3));
  // reversed CNOT: control is qubit 2
  Mat rc = lift_local(cnot_gate(), {2, 1}, 2);
  CHECK(rc.apply(basis_vec(4, 1)) == basis_vec(4, 3));
  CHECK(rc.apply(basis_vec(4, 3)) == basis_vec(4, 1));
  CHECK(rc == lift_oracle(cnot_gate(), {2, 1}, 2));
  // identity lifts to identity
  CHECK(lift_local(Mat::identity(2), {3}, 3) == Mat::identity(8));
  // random cross-checks, including non-adjacent and permuted index sets
  std::vector<std::vector<int>> idxs = {{1}, {2}, {3}, {1, 3}, {3, 1}, {2, 3}};
  for (const auto& idx : idxs) {
    Mat op(size_t{1} << idx.size(), size_t{1} << idx.size());
    for (auto& x : op.a) x = rand_scalar();
    CHECK(lift_local(op, idx, 3) == lift_oracle(op, idx, 3));
  }
  CHECK_THROWS(lift_local(x_gate(), {0}, 2));
  CHECK_THROWS(lift_local(cnot_gate(), {1, 1}, 2));
}

TEST_CASE("factoring states") {
  // |0> (x) |+> factors at qubit 2
  Vec prod = mu_tensor(v2(1, 0), v2(1, 1), {1}, 2);
  CHECK(prod == v4(1, 1, 0, 0));
  auto f = factor_at(Ray::of(prod), {2}, 2);
  REQUIRE(f);
  CHECK(*f == Ray::of(v2(1, 1)));
  // the Bell state does not factor (rank 2 across the cut)
  CHECK_FALSE(factor_at(Ray::of(v4(1, 0, 0, 1)), {1}, 2));
  // bell(1,2) (x) |0>_3 factors at {1,2} by explicit reshape
  Vec b3 = mu_tensor(v4(1, 0, 0, 1), v2(1, 0), {1, 2}, 3);
  auto f12 = factor_at(Ray::of(b3), {1, 2}, 3);
  REQUIRE(f12);
  CHECK(*f12 == Ray::of(v4(1, 0, 0, 1)));
  // factoring at the full index sequence returns the state itself
  auto all = factor_at(Ray::of(b3), {1, 2, 3}, 3);
  REQUIRE(all);
  CHECK(*all == Ray::of(b3));
  // a permuted full sequence permutes the tensor slots
  Vec ab = mu_tensor(v2(1, 2), v2(3, 5), {1}, 2);
  auto swapped = factor_at(Ray::of(ab), {2, 1}, 2);
  REQUIRE(swapped);
  CHECK(*swapped == Ray::of(mu_tensor(v2(3, 5), v2(1, 2), {1}, 2)));
}

TEST_CASE("factor/retensor round trip") {
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<int>> cuts = {{1}, {2}, {3}, {1, 3}, {2, 1}};
    const auto& idx = cuts[trial % cuts.size()];
    int k = static_cast<int>(idx.size());
    Vec left = rand_vec(size_t{1} << k);
    Vec right = rand_vec(size_t{1} << (3 - k));
    Ray s = Ray::of(mu_tensor(left, right, idx, 3));
    auto got = factor_at(s, idx, 3);
    REQUIRE(got);
    CHECK(*got == Ray::of(left));
    // re-tensoring the two factors reproduces the state
    std::vector<int> rest;
    for (int q = 1; q <= 3; ++q)
      if (std::find(idx.begin(), idx.end(), q) == idx.end()) rest.push_back(q);
    auto rf = factor_at(s, rest, 3);
    REQUIRE(rf);
    CHECK(Ray::of(mu_tensor(got->vec(), rf->vec(), idx, 3)) == s);
  }
  // entangled states are rejected: rank across the cut decides
  for (int trial = 0; trial < 20; ++trial) {
    Vec w = rand_vec(8);
    Ray s = Ray::of(w);
    // reshape rank computed independently from the definition
    std::vector<Vec> rows;
    for (size_t l = 0; l < 2; ++l) {
      Vec row(4);
      for (size_t m = 0; m < 4; ++m) row[m] = w[l * 4 + m];
      rows.push_back(row);
    }
    bool rank1 = Subspace::span(rows, 4).dim() == 1;
    CHECK(factor_at(s, {1}, 3).has_value() == rank1);
  }
}

TEST_CASE("large coefficients stay exact") {
  // coefficient growth in exact elimination exceeds 64-bit ranges quickly;
  // the algebra must not care
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> rows;
    for (int r = 0; r < 5; ++r) {
      Vec v(16);
      for (size_t k = 0; k < 16; ++k)
        v[k] = GaussianRational(Rational(big(rng)), Rational(big(rng)));
      rows.push_back(v);
    }
    Subspace w = Subspace::span(rows, 16);
    Subspace wc = orthocomplement(w);
    CHECK(w.dim() + wc.dim() == 16);
    CHECK(orthocomplement(wc) == w);
    CHECK(meet(w, wc).is_zero());
    for (const Vec& row : rows) CHECK(w.contains(row));
  }
}

TEST_CASE("invertible preimage equals inverse image") {
  Mat h2 = lift_local(h_gate(), {2}, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Subspace w = rand_subspace(4);
    // H is self-adjoint with H^dag H = 2I, so the inverse ray map is H itself
    CHECK(preimage(h2, w) == image(h2, w));
  }
}
