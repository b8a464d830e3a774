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

#include "lqp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lqp {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

/// In-place reduced row echelon form with exact pivoting (first nonzero
/// entry wins). Zero rows are dropped; rows end up ordered by pivot column.
void rref(std::vector<Vec>& rows) {
  if (rows.empty()) return;
  size_t d = rows[0].dim();
  size_t r = 0;
  for (size_t col = 0; col < d && r < rows.size(); ++col) {
    size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    GaussianRational inv = rows[r][col].inverse();
    for (size_t c = col; c < d; ++c) rows[r][c] = inv * rows[r][c];
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col].is_zero()) continue;
      GaussianRational f = rows[k][col];
      for (size_t c = col; c < d; ++c)
        rows[k][c] = rows[k][c] - f * rows[r][c];
    }
    ++r;
  }
  rows.resize(r);
}

size_t pivot_col(const Vec& row) {
  for (size_t c = 0; c < row.dim(); ++c)
    if (!row[c].is_zero()) return c;
  throw std::logic_error("zero row has no pivot");
}

}  // namespace

// ---------------------------------------------------------------------------
// Vec
// ---------------------------------------------------------------------------

bool Vec::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.dim() == b.dim(), "vector dimension mismatch");
  Vec r(a.dim());
  for (size_t k = 0; k < a.dim(); ++k) r[k] = a[k] + b[k];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.dim() == b.dim(), "vector dimension mismatch");
  Vec r(a.dim());
  for (size_t k = 0; k < a.dim(); ++k) r[k] = a[k] - b[k];
  return r;
}

Vec operator*(const GaussianRational& c, const Vec& v) {
  Vec r(v.dim());
  for (size_t k = 0; k < v.dim(); ++k) r[k] = c * v[k];
  return r;
}

Vec conj(const Vec& v) {
  Vec r(v.dim());
  for (size_t k = 0; k < v.dim(); ++k) r[k] = v[k].conj();
  return r;
}

GaussianRational inner(const Vec& x, const Vec& y) {
  require(x.dim() == y.dim(), "vector dimension mismatch");
  GaussianRational s;
  for (size_t k = 0; k < x.dim(); ++k) s = s + x[k].conj() * y[k];
  return s;
}

Vec basis_vec(size_t dim, size_t k) {
  Vec v(dim);
  v[k] = 1;
  return v;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.dim(); ++k) {
    if (k) s += ", ";
    s += to_string(v[k]);
  }
  return s + ")";
}

int cmp(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (size_t k = 0; k < a.dim(); ++k) {
    int c = cmp(a[k], b[k]);
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Ray
// ---------------------------------------------------------------------------

std::optional<Ray> Ray::make(const Vec& v) {
  for (size_t k = 0; k < v.dim(); ++k) {
    if (!v[k].is_zero()) {
      return Ray(v[k].inverse() * v);
    }
  }
  return std::nullopt;
}

Ray Ray::of(const Vec& v) {
  auto r = make(v);
  if (!r) throw std::logic_error("zero vector does not generate a state");
  return *r;
}

std::string to_string(const Ray& r) { return to_string(r.vec()); }

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::adjoint() const {
  Mat m(cols, rows);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols, rows);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(c, r) = at(r, c);
  return m;
}

Mat Mat::conjugate() const {
  Mat m(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k].conj();
  return m;
}

Vec Mat::apply(const Vec& v) const {
  require(v.dim() == cols, "matrix/vector dimension mismatch");
  Vec out(rows);
  for (size_t r = 0; r < rows; ++r) {
    GaussianRational s;
    for (size_t c = 0; c < cols; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) s = s + at(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols == b.rows, "matrix dimension mismatch");
  Mat m(a.rows, b.cols);
  for (size_t r = 0; r < a.rows; ++r)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (size_t c = 0; c < b.cols; ++c) {
        if (b.at(k, c).is_zero()) continue;
        m.at(r, c) = m.at(r, c) + a.at(r, k) * b.at(k, c);
      }
    }
  return m;
}

Mat operator*(const GaussianRational& c, const Mat& m) {
  Mat out(m.rows, m.cols);
  for (size_t k = 0; k < m.a.size(); ++k) out.a[k] = c * m.a[k];
  return out;
}

bool proportional(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  size_t k = 0;
  while (b.a[k].is_zero()) {
    if (!a.a[k].is_zero()) return false;
    ++k;
  }
  if (a.a[k].is_zero()) return false;
  GaussianRational lambda = a.a[k] / b.a[k];
  for (size_t t = 0; t < a.a.size(); ++t)
    if (a.a[t] != lambda * b.a[t]) return false;
  return true;
}

std::optional<Ray> apply_to_ray(const Mat& m, const Ray& r) {
  return Ray::make(m.apply(r.vec()));
}

std::string to_string(const Mat& m) {
  std::string s = "[";
  for (size_t r = 0; r < m.rows; ++r) {
    if (r) s += ",";
    s += "[";
    for (size_t c = 0; c < m.cols; ++c) {
      if (c) s += ", ";
      s += to_string(m.at(r, c));
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::zero(size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(size_t ambient) {
  std::vector<Vec> rows;
  rows.reserve(ambient);
  for (size_t k = 0; k < ambient; ++k) rows.push_back(basis_vec(ambient, k));
  return Subspace(ambient, std::move(rows));
}

Subspace Subspace::span(const std::vector<Vec>& vs, size_t ambient) {
  std::vector<Vec> rows;
  rows.reserve(vs.size());
  for (const Vec& v : vs) {
    require(v.dim() == ambient, "spanning vector dimension mismatch");
    if (!v.is_zero()) rows.push_back(v);
  }
  rref(rows);
  return Subspace(ambient, std::move(rows));
}

Subspace Subspace::line(const Ray& r) {
  return span({r.vec()}, r.dim());
}

bool Subspace::contains(const Vec& v) const {
  require(v.dim() == ambient_, "membership dimension mismatch");
  Vec rem = v;
  for (const Vec& row : basis_) {
    size_t p = pivot_col(row);
    if (!rem[p].is_zero()) {
      GaussianRational f = rem[p];
      for (size_t c = 0; c < ambient_; ++c) rem[c] = rem[c] - f * row[c];
    }
  }
  return rem.is_zero();
}

int cmp(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient() ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (size_t k = 0; k < a.dim(); ++k) {
    int c = cmp(a.basis()[k], b.basis()[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::string to_string(const Subspace& w) {
  std::string s = "span{";
  for (size_t k = 0; k < w.dim(); ++k) {
    if (k) s += ", ";
    s += to_string(w.basis()[k]);
  }
  return s + "}";
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.dim() > b.dim()) return false;
  for (const Vec& row : a.basis())
    if (!b.contains(row)) return false;
  return true;
}

Subspace join(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "subspace ambient mismatch");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(rows, a.ambient());
}

Subspace orthocomplement(const Subspace& w) {
  if (w.is_zero()) return Subspace::full(w.ambient());
  Mat m(w.dim(), w.ambient());
  for (size_t r = 0; r < w.dim(); ++r)
    for (size_t c = 0; c < w.ambient(); ++c)
      m.at(r, c) = w.basis()[r][c].conj();
  return kernel(m);
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "subspace ambient mismatch");
  return orthocomplement(join(orthocomplement(a), orthocomplement(b)));
}

Subspace kernel(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows);
  for (size_t r = 0; r < m.rows; ++r) {
    Vec v(m.cols);
    for (size_t c = 0; c < m.cols; ++c) v[c] = m.at(r, c);
    if (!v.is_zero()) rows.push_back(std::move(v));
  }
  rref(rows);
  std::vector<bool> is_pivot(m.cols, false);
  for (const Vec& row : rows) is_pivot[pivot_col(row)] = true;
  std::vector<Vec> null_basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols);
    x[f] = 1;
    for (const Vec& row : rows) x[pivot_col(row)] = -row[f];
    null_basis.push_back(std::move(x));
  }
  return Subspace::span(null_basis, m.cols);
}

Subspace image(const Mat& m, const Subspace& w) {
  require(m.cols == w.ambient(), "image dimension mismatch");
  std::vector<Vec> rows;
  rows.reserve(w.dim());
  for (const Vec& b : w.basis()) rows.push_back(m.apply(b));
  return Subspace::span(rows, m.rows);
}

Subspace preimage(const Mat& m, const Subspace& w) {
  require(m.is_square() && m.rows == w.ambient(),
          "preimage dimension mismatch");
  Subspace wc = orthocomplement(w);
  if (wc.is_zero()) return Subspace::full(m.cols);
  // m x in w  iff  <c | m x> = 0 for all c spanning the complement of w,
  // i.e. x is in the kernel of the stacked rows conj(c)^T m.
  Mat rows(wc.dim(), m.cols);
  for (size_t r = 0; r < wc.dim(); ++r) {
    const Vec& c = wc.basis()[r];
    for (size_t col = 0; col < m.cols; ++col) {
      GaussianRational s;
      for (size_t g = 0; g < m.rows; ++g)
        s = s + c[g].conj() * m.at(g, col);
      rows.at(r, col) = s;
    }
  }
  return kernel(rows);
}

std::vector<Vec> orthogonal_basis(const Subspace& w) {
  std::vector<Vec> os;
  os.reserve(w.dim());
  for (const Vec& b : w.basis()) {
    Vec o = b;
    for (const Vec& prev : os) {
      GaussianRational coef = inner(prev, o) / GaussianRational(inner(prev, prev));
      o = o - coef * prev;
    }
    os.push_back(std::move(o));
  }
  return os;
}

Mat projector_matrix(const Subspace& w) {
  Mat p(w.ambient(), w.ambient());
  for (const Vec& o : orthogonal_basis(w)) {
    GaussianRational n = inner(o, o);
    GaussianRational ninv = n.inverse();
    for (size_t r = 0; r < w.ambient(); ++r) {
      if (o[r].is_zero()) continue;
      for (size_t c = 0; c < w.ambient(); ++c) {
        if (o[c].is_zero()) continue;
        p.at(r, c) = p.at(r, c) + ninv * o[r] * o[c].conj();
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Qubit-structured operations
// ---------------------------------------------------------------------------

namespace {

void check_indices(const std::vector<int>& idx, int n) {
  require(n >= 1, "qubit count must be positive");
  require(!idx.empty(), "index sequence must be nonempty");
  for (size_t s = 0; s < idx.size(); ++s) {
    require(idx[s] >= 1 && idx[s] <= n, "qubit index out of range");
    for (size_t t = s + 1; t < idx.size(); ++t)
      require(idx[s] != idx[t], "repeated qubit index");
  }
}

int bit_of(size_t g, int qubit, int n) { return (g >> (n - qubit)) & 1; }

/// Qubits not in idx, ascending.
std::vector<int> rest_of(const std::vector<int>& idx, int n) {
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q)
    if (std::find(idx.begin(), idx.end(), q) == idx.end()) rest.push_back(q);
  return rest;
}

size_t local_index(size_t g, const std::vector<int>& qubits, int n) {
  size_t l = 0;
  for (int q : qubits) l = (l << 1) | bit_of(g, q, n);
  return l;
}

}  // namespace

Mat lift_local(const Mat& op, const std::vector<int>& idx, int n) {
  check_indices(idx, n);
  int k = static_cast<int>(idx.size());
  require(op.is_square() && op.rows == (size_t{1} << k),
          "gate arity does not match index count");
  size_t dim = size_t{1} << n;
  Mat m(dim, dim);
  for (size_t g = 0; g < dim; ++g) {
    size_t l = local_index(g, idx, n);
    for (size_t r = 0; r < op.rows; ++r) {
      if (op.at(r, l).is_zero()) continue;
      size_t h = g;
      for (int t = 0; t < k; ++t) {
        size_t mask = size_t{1} << (n - idx[t]);
        if ((r >> (k - 1 - t)) & 1)
          h |= mask;
        else
          h &= ~mask;
      }
      m.at(h, g) = op.at(r, l);
    }
  }
  return m;
}

std::optional<Ray> factor_at(const Ray& r, const std::vector<int>& idx,
                             int n) {
  check_indices(idx, n);
  require(r.dim() == (size_t{1} << n), "state dimension mismatch");
  int k = static_cast<int>(idx.size());
  std::vector<int> rest = rest_of(idx, n);
  size_t lrows = size_t{1} << k;
  size_t rcols = size_t{1} << (n - k);
  // Reshape across the cut.
  std::vector<Vec> rows(lrows, Vec(rcols));
  for (size_t g = 0; g < r.dim(); ++g) {
    size_t l = local_index(g, idx, n);
    size_t m = rest.empty() ? 0 : local_index(g, rest, n);
    rows[l][m] = r.vec()[g];
  }
  // Rank-1 test: the span of the nonzero rows must be a single line.
  Subspace row_space = Subspace::span(rows, rcols);
  if (row_space.dim() != 1) return std::nullopt;
  // The left factor is any nonzero column.
  size_t col = pivot_col(row_space.basis()[0]);
  Vec left(lrows);
  for (size_t l = 0; l < lrows; ++l) left[l] = rows[l][col];
  return Ray::make(left);
}

Vec mu_tensor(const Vec& left, const Vec& right, const std::vector<int>& idx,
              int n) {
  check_indices(idx, n);
  int k = static_cast<int>(idx.size());
  require(left.dim() == (size_t{1} << k), "left factor dimension mismatch");
  require(right.dim() == (size_t{1} << (n - k)),
          "right factor dimension mismatch");
  std::vector<int> rest = rest_of(idx, n);
  size_t dim = size_t{1} << n;
  Vec out(dim);
  for (size_t g = 0; g < dim; ++g) {
    size_t l = local_index(g, idx, n);
    size_t m = rest.empty() ? 0 : local_index(g, rest, n);
    out[g] = left[l] * right[m];
  }
  return out;
}

}  // namespace lqp
