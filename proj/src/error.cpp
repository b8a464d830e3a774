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

#include "lqp/error.hpp"

namespace lqp {

const char* err_name(Err e) {
  switch (e) {
    case Err::Parse: return "E_PARSE";
    case Err::Arity: return "E_ARITY";
    case Err::Fragment: return "E_FRAGMENT";
    case Err::Nondet: return "E_NONDET";
    case Err::Top: return "E_TOP";
    case Err::StarBound: return "E_STAR_BOUND";
    case Err::NotTestableLocal: return "E_NOT_TESTABLE_LOCAL";
  }
  return "E_UNKNOWN";
}

int err_exit_code(Err e) {
  switch (e) {
    case Err::Parse:
    case Err::Arity:
      return 2;
    case Err::Fragment:
    case Err::Nondet:
    case Err::Top:
    case Err::NotTestableLocal:
      return 3;
    case Err::StarBound:
      return 4;
  }
  return 1;
}

}  // namespace lqp
