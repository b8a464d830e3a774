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

#ifndef LQP_ERROR_HPP
#define LQP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lqp {

/// Stable error taxonomy. Everything a user can trigger maps onto one of
/// these; internal invariant violations use plain logic_error instead.
enum class Err {
  Parse,             // E_PARSE: lexical/syntax error, bad model file
  Arity,             // E_ARITY: arity mismatch, bad/duplicate index
  Fragment,          // E_FRAGMENT: formula outside the symbolic fragment
  Nondet,            // E_NONDET: program not deterministic where one is required
  Top,               // E_TOP: trivial program where successors must be finite
  StarBound,         // E_STAR_BOUND: iteration did not stabilize in time
  NotTestableLocal,  // E_NOT_TESTABLE_LOCAL: teleportation precondition
};

const char* err_name(Err e);

/// Process exit code for the CLI: 2 = parse/arity, 3 = fragment-class,
/// 4 = star bound.
int err_exit_code(Err e);

class LqpError : public std::runtime_error {
 public:
  LqpError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace lqp

#endif
