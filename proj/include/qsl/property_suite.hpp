// Copyright 2026 The qsl Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsl/state.hpp"

namespace qsl {

struct PropertyConfig {
  int trials = 1000;
  std::vector<Index> dims{2, 3, 4, 5, 6};
  std::uint64_t seed = 0;
  /// Adds a deliberately non-Hermitian "observable" to exercise the
  /// precondition path of the suite.
  bool inject_non_hermitian = false;
};

/// Slack convention: for an inequality lhs >= rhs the slack is lhs - rhs;
/// for an equality it is -|lhs - rhs|. An invariant passes when its worst
/// slack is >= -tolerance and no trial was rejected.
struct InvariantResult {
  std::string name;
  int trials = 0;
  int rejections = 0;
  double worst_slack = 0.0;
  double tolerance = 0.0;
  bool diagnostic = false;  // reported, never gates the overall result
  bool passed = true;
  std::string note;
};

struct PropertyReport {
  std::vector<InvariantResult> invariants;
  bool passed = true;

  nlohmann::json to_json() const;
};

PropertyReport run_property_suite(const PropertyConfig& cfg);

}  // namespace qsl
