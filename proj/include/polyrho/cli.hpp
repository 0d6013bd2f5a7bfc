// Copyright 2026 The polyrho Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyrho::cli {

/// Runs one CLI invocation (args exclude the program name). JSON goes to
/// `out`, one-line diagnostics to `err`. Exit codes: 0 success, 1 input or
/// validation failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// main() adapter: forwards argv to the stream overload on stdout/stderr.
int run_main(int argc, char** argv);

}  // namespace polyrho::cli
