// Copyright 2026 The polarctx Authors
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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "polarctx/configuration.hpp"
#include "polarctx/run_record.hpp"

namespace polarctx::testing {

inline std::string fixture_path(const std::string &name) { return std::string(POLARCTX_FIXTURE_DIR) + "/" + name; }

/// The ten-line two-spread of four-qubit observables with five negative lines.
inline Configuration two_spread() {
    return build_configuration(load_run_record(fixture_path("two_spread.json")).geometry);
}

}  // namespace polarctx::testing

namespace polarctx::testing {

/// Unsatisfied configuration of a stored solve record.
inline UnsatisfiedConfiguration fixture_unsatisfied(const std::string &name) {
    const RunRecord record = load_run_record(fixture_path(name));
    const Configuration config = build_configuration(record.geometry);
    return unsatisfied(config, record_assignment(record, config));
}

}  // namespace polarctx::testing
