//------------------------------------------------------------------------------
//
//   Copyright 2026 The divseq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <ostream>

namespace divseq {

/// Exit codes of the command-line front-end.
enum ExitCode : int
{
  kExitOk                = 0,
  kExitVerifyFailed      = 1,
  kExitUsage             = 2,
  kExitToleranceFailure  = 3,
};

/// Runs the `divseq` command line: subcommands eval, sweep, verify, polylog.
/// Results go to `out`, diagnostics to `err`.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

}  // namespace divseq
