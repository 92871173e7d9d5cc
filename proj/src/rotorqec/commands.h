// Copyright 2026 The rotorqec Authors
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

#ifndef ROTORQEC_COMMANDS_H
#define ROTORQEC_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "rotorqec/config.h"

namespace rotorqec {

constexpr int EXIT_OK = 0;
constexpr int EXIT_ASSERTION = 1;
constexpr int EXIT_CONFIG = 2;

int cmd_verify_propagation(const RunConfig &cfg, std::ostream &out);
int cmd_simulate(const RunConfig &cfg, std::ostream &out);
int cmd_distance(const RunConfig &cfg, std::ostream &out);
int cmd_gate_check(const RunConfig &cfg, std::ostream &out);
int cmd_appendix_b(const RunConfig &cfg, std::ostream &out);

/// Full command line, argv[0] included. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rotorqec

#endif
