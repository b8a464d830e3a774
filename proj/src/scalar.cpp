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

#include "lqp/scalar.hpp"

#include <stdexcept>

namespace lqp {

GaussianRational GaussianRational::inverse() const {
  Rational n = norm_sq();
  if (n == 0) throw std::logic_error("division by zero scalar");
  return {re / n, -im / n};
}

int cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = ::cmp(a.re, b.re);
  if (c != 0) return c;
  return ::cmp(a.im, b.im);
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string s;
  if (z.re != 0) s += z.re.get_str();
  if (z.im != 0) {
    if (z.im == 1) {
      s += z.re != 0 ? "+i" : "i";
    } else if (z.im == -1) {
      s += "-i";
    } else {
      std::string im = z.im.get_str();
      if (z.re != 0 && z.im > 0) s += "+";
      s += im + "i";
    }
  }
  return s;
}

}  // namespace lqp
