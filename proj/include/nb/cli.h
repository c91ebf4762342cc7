// Copyright 2026 The nicebases Authors
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

#ifndef NB_CLI_H
#define NB_CLI_H

#include <ostream>
#include <string>
#include <vector>

#include "nb/zncodes.h"

namespace nb {

enum class OutputFormat { kJson, kText };

struct RunConfig {
    Guards guards;
    bool strict_decoder = true;
    OutputFormat format = OutputFormat::kJson;
    bool slow = false;
    bool timing = true;
};

/// Applies NICE_MAX_AMBIENT and NICE_MAX_DENSE_DIM when set.
void apply_env_overrides(RunConfig &config);

/// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error,
/// 3 input or resource error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace nb

#endif
