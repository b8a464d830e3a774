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

#include "lqp/frame.hpp"

#include <stdexcept>

#include "lqp/error.hpp"

namespace lqp {

namespace {

Mat mat2(long a, long b, long c, long d) {
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

bool is_builtin_gate_name(const std::string& name) {
  return name == "X" || name == "Z" || name == "H" || name == "CNOT";
}

GateDef builtin_gate(const std::string& name) {
  GateDef g;
  g.name = name;
  if (name == "X") {
    g.arity = 1;
    g.m = mat2(0, 1, 1, 0);
  } else if (name == "Z") {
    g.arity = 1;
    g.m = mat2(1, 0, 0, -1);
  } else if (name == "H") {
    g.arity = 1;
    g.m = mat2(1, 1, 1, -1);
  } else if (name == "CNOT") {
    g.arity = 2;
    g.m = Mat(4, 4);
    g.m.at(0, 0) = 1;  // |00> -> |00>
    g.m.at(1, 1) = 1;  // |01> -> |01>
    g.m.at(3, 2) = 1;  // |10> -> |11>
    g.m.at(2, 3) = 1;  // |11> -> |10>
  } else {
    throw LqpError(Err::Arity, "unknown builtin gate '" + name + "'");
  }
  validate_gate(g);
  return g;
}

void validate_gate(GateDef& g) {
  if (!g.m.is_square())
    throw LqpError(Err::Parse, "gate '" + g.name + "' matrix is not square");
  if (g.m.rows != (size_t{1} << g.arity))
    throw LqpError(Err::Parse, "gate '" + g.name + "' matrix size " +
                                   std::to_string(g.m.rows) +
                                   " does not match arity " +
                                   std::to_string(g.arity));
  Mat prod = g.m.adjoint() * g.m;
  GaussianRational c = prod.at(0, 0);
  for (size_t r = 0; r < prod.rows; ++r) {
    for (size_t col = 0; col < prod.cols; ++col) {
      GaussianRational want = (r == col) ? c : GaussianRational(0);
      if (prod.at(r, col) != want) {
        throw LqpError(Err::Parse,
                       "gate '" + g.name + "' is not unitary up to scale: " +
                           "(M^dag M)[" + std::to_string(r) + "][" +
                           std::to_string(col) + "] = " +
                           to_string(prod.at(r, col)));
      }
    }
  }
  if (!c.is_real() || c.re <= 0)
    throw LqpError(Err::Parse, "gate '" + g.name +
                                   "' is singular: M^dag M = " + to_string(c) +
                                   " * I");
  g.scale = c.re;
}

std::optional<Ray> project_ray(const Subspace& w, const Ray& r) {
  if (r.dim() != w.ambient())
    throw std::invalid_argument("projection dimension mismatch");
  Vec out(w.ambient());
  for (const Vec& o : orthogonal_basis(w)) {
    GaussianRational coef = inner(o, r.vec()) / inner(o, o);
    if (!coef.is_zero()) out = out + coef * o;
  }
  return Ray::make(out);
}

bool measurement_related(const Ray& s, const Ray& t) {
  return !inner(s.vec(), t.vec()).is_zero();
}

Subspace local_state_property(const Vec& psi, const std::vector<int>& idx,
                              int n) {
  size_t rest_dim = size_t{1} << (n - static_cast<int>(idx.size()));
  std::vector<Vec> rows;
  rows.reserve(rest_dim);
  for (size_t b = 0; b < rest_dim; ++b)
    rows.push_back(mu_tensor(psi, basis_vec(rest_dim, b), idx, n));
  return Subspace::span(rows, size_t{1} << n);
}

Vec map_state_psi(const Mat& f) {
  if (!f.is_square() || f.rows != 2)
    throw std::invalid_argument("map-state duality needs a single-qubit map");
  if (f.is_zero())
    throw std::invalid_argument("map-state duality is undefined for the zero map");
  Vec psi(4);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) psi[2 * a + b] = f.at(b, a);
  return psi;
}

Mat restrict_first(const Mat& f, int n) {
  if (n < 1 || !f.is_square() || f.rows != (size_t{1} << n))
    throw std::invalid_argument("restrict_first dimension mismatch");
  // The embedded qubit space is spanned by |0...0> and |10...0>, i.e. the
  // basis vectors with global indices 0 and 2^(n-1); projecting onto it
  // just reads those two coordinates.
  size_t step = size_t{1} << (n - 1);
  Mat out(2, 2);
  for (size_t b = 0; b < 2; ++b)
    for (size_t a = 0; a < 2; ++a) out.at(b, a) = f.at(b * step, a * step);
  return out;
}

Subspace entangled_property(const Mat& pi, int i, int j, int n,
                            bool* zero_map) {
  if (i == j) throw std::invalid_argument("entanglement atom needs i != j");
  if (n < 2) throw std::invalid_argument("entanglement atom needs n >= 2");
  Mat f = restrict_first(pi, n);
  if (zero_map) *zero_map = f.is_zero();
  if (f.is_zero()) return Subspace::zero(size_t{1} << n);
  return local_state_property(map_state_psi(f), {i, j}, n);
}

}  // namespace lqp
