/*
   Copyright 2026 The floquetp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLOQUETP_CLI_HPP
#define FLOQUETP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace floquetp {

/// Exit codes: 0 success, 1 invalid input or internal disagreement, 2 the
/// query has an empty answer (solve or descend found no nonzero solution).
enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_empty = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floquetp

#endif
