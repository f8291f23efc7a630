// Copyright 2026 The steerlab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * End-to-end reproduction checks: every published threshold, identity and
 * worked example this library claims to reproduce, with its tolerance
 * pinned. Consumed by the acceptance test binary and the `reproduce` CLI
 * subcommand.
 */

#pragma once

#include <string>
#include <vector>

namespace steerlab {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured numbers, for the report line
};

/// Runs all reproduction criteria; completes in seconds.
std::vector<CriterionResult> run_acceptance();

}  // namespace steerlab
