// Copyright 2026 The gradload Authors
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

#ifndef GRADLOAD_CLI_H
#define GRADLOAD_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace gradload {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBoundInvalid = 3;

/// Runs one command line. `args` excludes the program name. Subcommands:
/// quantize, simulate, sweep, estimate, resources, circuit.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gradload

#endif
