// snrkit/cli/commands.h

// Copyright 2026  snrkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SNRKIT_CLI_COMMANDS_H_
#define SNRKIT_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace snrkit {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;     // some items failed and --strict was given
constexpr int kExitInvalid = 2;     // argument, validation or fatal error

/// Runs the snrkit command line. args excludes the program name, e.g.
/// {"plan", "--manifest", "m.jsonl", ...}. Returns the process exit code.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace snrkit

#endif  // SNRKIT_CLI_COMMANDS_H_
