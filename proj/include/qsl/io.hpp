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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsl/ensembles.hpp"
#include "qsl/speed_limits.hpp"
#include "qsl/uncertainty.hpp"

namespace qsl::io {

using nlohmann::json;

/// Matrices: {"dim": d, "re": [[...]], "im": [[...]]}. "im" may be omitted.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

/// Kets: {"re": [...], "im": [...]}. "im" may be omitted.
json ket_to_json(const ComplexVector& v);
ComplexVector ket_from_json(const json& j);

Observable observable_from_json(const json& j);
PureState pure_state_from_json(const json& j);
DensityMatrix density_matrix_from_json(const json& j);

json to_json(const UncertaintyReport& r);
json to_json(const BoundReport& r);

/// gue {dim, seed}
GueConfig gue_config_from_json(const json& j);
/// spin {M, blocks, omega0, omega} (+ optional hbar)
SpinChainConfig spin_config_from_json(const json& j);

json read_json_file(const std::string& path);

/// Header of every bound CSV.
inline constexpr const char* kBoundCsvHeader = "t,tau_mt,tau_tqsl,delta,quad_error,validity";

/// One row, 12 significant digits, no trailing newline.
std::string bound_csv_row(const BoundReport& r);
/// Header plus one LF-terminated row per report.
std::string bound_csv(const std::vector<BoundReport>& rows);

/// printf-style %.12g.
std::string format_double(double x);

}  // namespace qsl::io
