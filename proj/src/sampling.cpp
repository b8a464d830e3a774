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

#include "lqp/sampling.hpp"

#include <stdexcept>

namespace lqp {

long Sampler::range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sample range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

GaussianRational Sampler::scalar(long height, bool real) {
  Rational re(range(-height, height));
  Rational im(real ? 0 : range(-height, height));
  return {re, im};
}

Vec Sampler::vec(size_t dim, long height, bool real) {
  while (true) {
    Vec v(dim);
    for (size_t k = 0; k < dim; ++k) v[k] = scalar(height, real);
    if (!v.is_zero()) return v;
  }
}

Ray Sampler::ray(size_t dim, long height, bool real) {
  return Ray::of(vec(dim, height, real));
}

Subspace Sampler::subspace(size_t dim, long height) {
  std::vector<Vec> vs;
  long count = range(1, 3);
  for (long k = 0; k < count; ++k) vs.push_back(vec(dim, height));
  return Subspace::span(vs, dim);
}

Mat Sampler::map2(long height, bool real) {
  while (true) {
    Mat m(2, 2);
    for (auto& x : m.a) x = scalar(height, real);
    if (!m.is_zero()) return m;
  }
}

Mat Sampler::unitary2(long height, bool real) {
  GaussianRational a, b;
  do {
    a = scalar(height, real);
    b = scalar(height, real);
  } while (a.is_zero() && b.is_zero());
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = -b.conj();
  m.at(1, 1) = a.conj();
  // optional exact unit phase on the second column
  GaussianRational units[4] = {1, -1, GaussianRational::i(),
                               GaussianRational(0) - GaussianRational::i()};
  GaussianRational u = real ? units[pick(2)] : units[pick(4)];
  m.at(0, 1) = m.at(0, 1) * u;
  m.at(1, 1) = m.at(1, 1) * u;
  return m;
}

std::vector<int> Sampler::distinct_indices(int k, int n) {
  if (k > n) throw std::invalid_argument("not enough qubits to sample from");
  std::vector<int> pool;
  for (int q = 1; q <= n; ++q) pool.push_back(q);
  std::vector<int> out;
  for (int t = 0; t < k; ++t) {
    size_t at = pick(pool.size());
    out.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<long>(at));
  }
  return out;
}

PPtr sample_gate(Sampler& s, int n) {
  switch (s.pick(n >= 2 ? 4 : 3)) {
    case 0: return pgate("X", {s.index(n)});
    case 1: return pgate("Z", {s.index(n)});
    case 2: return pgate("H", {s.index(n)});
    default: {
      std::vector<int> ij = s.distinct_indices(2, n);
      return pgate("CNOT", {ij[0], ij[1]});
    }
  }
}

FPtr sample_testable_formula(Sampler& s, int n, int depth) {
  if (depth <= 0) {
    switch (s.pick(n >= 2 ? 3 : 2)) {
      case 0: return ffalsum();
      case 1: return fconst("01+-"[s.pick(4)], s.index(n));
      default: {
        std::vector<int> ij = s.distinct_indices(2, n);
        return fent(s.coin() ? pgate("Z", {1}) : pgate("X", {1}), ij[0],
                    ij[1]);
      }
    }
  }
  if (s.coin())
    return fand(sample_testable_formula(s, n, depth - 1),
                sample_testable_formula(s, n, depth - 1));
  return fbox(sample_deterministic_program(s, n, depth - 1),
              sample_testable_formula(s, n, depth - 1));
}

PPtr sample_deterministic_program(Sampler& s, int n, int depth) {
  if (depth <= 0) return sample_gate(s, n);
  switch (s.pick(4)) {
    case 0: return ptest(sample_testable_formula(s, n, depth - 1));
    case 1: return padj(sample_deterministic_program(s, n, depth - 1));
    case 2:
      return pseq(sample_deterministic_program(s, n, depth - 1),
                  sample_deterministic_program(s, n, depth - 1));
    default: return sample_gate(s, n);
  }
}

}  // namespace lqp
