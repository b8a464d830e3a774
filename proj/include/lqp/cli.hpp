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

#ifndef LQP_CLI_HPP
#define LQP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lqp {

/// Runs one command-line invocation. Exit codes: 0 affirmative/pass,
/// 1 negative/fail, 2 parse or arity error, 3 fragment-class error,
/// 4 star bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lqp

#endif
