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

#ifndef LQP_LINALG_HPP
#define LQP_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lqp/scalar.hpp"

namespace lqp {

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

struct Vec {
  std::vector<GaussianRational> e;

  Vec() = default;
  explicit Vec(size_t dim) : e(dim) {}
  Vec(std::initializer_list<GaussianRational> xs) : e(xs) {}

  size_t dim() const { return e.size(); }
  GaussianRational& operator[](size_t k) { return e[k]; }
  const GaussianRational& operator[](size_t k) const { return e[k]; }

  bool is_zero() const;

  friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const GaussianRational& c, const Vec& v);
Vec conj(const Vec& v);

/// <x|y>, conjugate-linear in the left argument.
GaussianRational inner(const Vec& x, const Vec& y);

/// Standard basis vector e_k of the given dimension.
Vec basis_vec(size_t dim, size_t k);

std::string to_string(const Vec& v);

int cmp(const Vec& a, const Vec& b);

// ---------------------------------------------------------------------------
// Rays (states)
// ---------------------------------------------------------------------------

/// A one-dimensional subspace, stored as the unique representative whose
/// first nonzero entry is 1. Two rays compare equal iff they are the same
/// state, regardless of the vectors they were built from.
class Ray {
 public:
  /// Canonicalizes v; nullopt iff v = 0.
  static std::optional<Ray> make(const Vec& v);

  /// As make(), but throws logic_error on the zero vector.
  static Ray of(const Vec& v);

  const Vec& vec() const { return v_; }
  size_t dim() const { return v_.dim(); }

  friend bool operator==(const Ray& a, const Ray& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Ray& a, const Ray& b) { return !(a == b); }
  friend bool operator<(const Ray& a, const Ray& b) {
    return cmp(a.v_, b.v_) < 0;
  }

 private:
  explicit Ray(Vec v) : v_(std::move(v)) {}
  Vec v_;
};

std::string to_string(const Ray& r);

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<GaussianRational> a;  // row-major

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static Mat identity(size_t n);

  GaussianRational& at(size_t r, size_t c) { return a[r * cols + c]; }
  const GaussianRational& at(size_t r, size_t c) const {
    return a[r * cols + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows == cols; }

  Mat adjoint() const;    // conjugate transpose
  Mat transpose() const;
  Mat conjugate() const;

  Vec apply(const Vec& v) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const GaussianRational& c, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
};

/// True iff a = c*b for some nonzero scalar c (equality of induced ray maps).
bool proportional(const Mat& a, const Mat& b);

/// m applied to a ray; nullopt when the image vector is zero.
std::optional<Ray> apply_to_ray(const Mat& m, const Ray& r);

std::string to_string(const Mat& m);

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A linear subspace in canonical form: the basis rows are the reduced
/// row-echelon form of any spanning set, so equality of subspaces is
/// equality of representations. An empty basis is the zero space.
class Subspace {
 public:
  static Subspace zero(size_t ambient);
  static Subspace full(size_t ambient);
  static Subspace span(const std::vector<Vec>& vs, size_t ambient);
  static Subspace line(const Ray& r);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Ray& r) const { return contains(r.vec()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Subspace(size_t ambient, std::vector<Vec> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  size_t ambient_;
  std::vector<Vec> basis_;  // RREF rows, pivots strictly increasing
};

int cmp(const Subspace& a, const Subspace& b);
std::string to_string(const Subspace& w);

bool subspace_leq(const Subspace& a, const Subspace& b);  // a included in b
Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
Subspace orthocomplement(const Subspace& w);

Subspace kernel(const Mat& m);
Subspace image(const Mat& m, const Subspace& w);
/// {x : m x in w}
Subspace preimage(const Mat& m, const Subspace& w);

/// Orthogonal (not normalized) basis of w; Gram-Schmidt with exact
/// coefficients <o|x>/<o|o>, which stay in the Gaussian rationals.
std::vector<Vec> orthogonal_basis(const Subspace& w);

/// The matrix of the orthogonal projector onto w.
Mat projector_matrix(const Subspace& w);

// ---------------------------------------------------------------------------
// Qubit-structured operations.
//
// Convention fixed for the whole project: qubit 1 is the most significant
// bit, so basis state |x1 ... xn> has index sum x_k 2^(n-k). Index sequences
// are 1-based and order-significant: position t of a local space maps to
// global qubit idx[t].
// ---------------------------------------------------------------------------

/// The unique 2^n map acting as op on the qubits listed in idx (in that
/// order) and as the identity elsewhere.
Mat lift_local(const Mat& op, const std::vector<int>& idx, int n);

/// Splits r across the idx-vs-rest cut. Defined iff the reshaped
/// coefficient matrix has rank 1; returns the canonical ray of the factor
/// carried by the idx qubits.
std::optional<Ray> factor_at(const Ray& r, const std::vector<int>& idx, int n);

/// Inverse of the factoring cut: assembles the global vector whose
/// idx-qubits carry `left` and whose remaining qubits (ascending) carry
/// `right`.
Vec mu_tensor(const Vec& left, const Vec& right, const std::vector<int>& idx,
              int n);

}  // namespace lqp

#endif
