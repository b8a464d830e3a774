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

#ifndef LQP_PARSE_HPP
#define LQP_PARSE_HPP

#include <string>

#include "lqp/ast.hpp"
#include "lqp/linalg.hpp"
#include "lqp/model.hpp"

namespace lqp {

/// Formula and program concrete syntax. Errors carry line:column positions.
FPtr parse_formula(const std::string& text);
PPtr parse_program(const std::string& text);

/// Scalar syntax shared by all file formats: "1/2", "-3", "2i", "1/2+1/2i".
GaussianRational parse_scalar(const std::string& text);

/// Vector syntax: "(1, 0, 1/2+1/2i, 0)".
Vec parse_vec(const std::string& text);

/// Line-oriented model files: `qubits N`, `var NAME arity K = span { ... }`,
/// `gate NAME arity K = [[...],...]`, `state NAME = (...)`, `#` comments.
ModelDecl parse_model(const std::string& text);

ModelDecl load_model_file(const std::string& path);

}  // namespace lqp

#endif
