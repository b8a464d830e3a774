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

#ifndef LQP_SCALAR_HPP
#define LQP_SCALAR_HPP

#include <gmpxx.h>

#include <string>

namespace lqp {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
/// Every amplitude in the tool lives in this field, so equality tests are
/// exact and no tolerance appears anywhere.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT: implicit on purpose
  GaussianRational(Rational r) : re(std::move(r)), im(0) {
    re.canonicalize();
  }
  GaussianRational(Rational r, Rational i)
      : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2, a nonnegative rational.
  Rational norm_sq() const { return re * re + im * im; }

  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

/// Total order (re before im, numerically); used only to make container
/// contents and reports deterministic.
int cmp(const GaussianRational& a, const GaussianRational& b);

/// Renders in the scalar text syntax shared by all file formats:
/// "0", "-1", "2/3", "2i", "1/2+1/2i", "1-2i".
std::string to_string(const GaussianRational& z);
std::string to_string(const Rational& r);

}  // namespace lqp

#endif
