// Copyright 2026 The hqc Authors
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

#ifndef HQC_CLI_HPP
#define HQC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hqc::cli {

/// Runs one invocation. `args` excludes the program name. Returns 0 for
/// detected/true/success, 1 for undetected/false, 2 for usage or input
/// errors (with a one-line diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hqc::cli

#endif  // HQC_CLI_HPP
