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

// Reproduction suite driver: one pass/fail line per criterion, nonzero exit
// when any fails.

#include <cstdio>

#include "steerlab/acceptance.hpp"

int main() {
    const auto results = steerlab::run_acceptance();
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("[%s] %2d. %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str());
        if (!r.detail.empty()) std::printf("         %s\n", r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
