// Copyright 2026 The qzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QZETA_CLI_HPP_
#define QZETA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta {

/**
 * Runs one subcommand. args excludes the program name.
 * Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qzeta

#endif  // QZETA_CLI_HPP_
