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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steerlab::cli {

inline constexpr const char* kVersion = "steerlab 1.0.0";

/// Run one CLI invocation. `args` excludes the program name. JSON/CSV goes
/// to `out`, usage errors to `err`. Exit codes: 0 success, 1 numeric/domain
/// error (JSON error object on `out`), 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steerlab::cli
