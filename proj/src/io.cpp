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

#include "qsl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl::io {

namespace {

[[noreturn]] void config_error(const std::string& msg) {
  fail(ErrorCode::kConfigError, msg);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    config_error(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception& e) {
    config_error(std::string("key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ii.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto dim = get_as<Index>(j, "dim");
  const auto re = get_as<std::vector<std::vector<double>>>(j, "re");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = get_as<std::vector<std::vector<double>>>(j, "im");
  if (dim < 1 || static_cast<Index>(re.size()) != dim ||
      (!im.empty() && static_cast<Index>(im.size()) != dim)) {
    config_error("matrix rows do not match dim");
  }
  ComplexMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& row = re[static_cast<std::size_t>(r)];
    if (static_cast<Index>(row.size()) != dim ||
        (!im.empty() && static_cast<Index>(im[static_cast<std::size_t>(r)].size()) != dim)) {
      config_error("matrix columns do not match dim");
    }
    for (Index c = 0; c < dim; ++c) {
      const double imag = im.empty() ? 0.0 : im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      m(r, c) = Complex(row[static_cast<std::size_t>(c)], imag);
    }
  }
  return m;
}

json ket_to_json(const ComplexVector& v) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector ket_from_json(const json& j) {
  const auto re = get_as<std::vector<double>>(j, "re");
  std::vector<double> im;
  if (j.contains("im")) im = get_as<std::vector<double>>(j, "im");
  if (re.empty() || (!im.empty() && im.size() != re.size())) {
    config_error("ket re/im lengths differ or are empty");
  }
  ComplexVector v(static_cast<Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v(static_cast<Index>(i)) = Complex(re[i], im.empty() ? 0.0 : im[i]);
  }
  return v;
}

Observable observable_from_json(const json& j) {
  return Observable(matrix_from_json(j));
}

PureState pure_state_from_json(const json& j) {
  return PureState(ket_from_json(j));
}

DensityMatrix density_matrix_from_json(const json& j) {
  return DensityMatrix(matrix_from_json(j));
}

json to_json(const UncertaintyReport& r) {
  return {{"delta_a", r.delta_a},           {"delta_b", r.delta_b},
          {"tighter_bound", r.tighter_bound}, {"rs_bound", r.rs_bound},
          {"cross_term", r.cross_term},     {"correction_k", r.correction_k}};
}

json to_json(const BoundReport& r) {
  return {{"tau_actual", r.tau_actual},
          {"tau_mt", r.tau_mt},
          {"correction_integral", r.correction_integral},
          {"correction_term", r.correction_term},
          {"tau_tqsl", r.tau_tqsl},
          {"delta", r.delta},
          {"basis_id", r.basis_id},
          {"validity", r.validity_clean ? "clean" : "flagged"},
          {"quadrature",
           {{"scheme", r.quadrature.scheme},
            {"step", r.quadrature.step},
            {"integral_error", r.quadrature.integral_error},
            {"bound_error", r.quadrature.bound_error}}}};
}

GueConfig gue_config_from_json(const json& j) {
  GueConfig cfg;
  cfg.dim = get_as<Index>(j, "dim");
  cfg.seed = get_as<std::uint64_t>(j, "seed");
  if (cfg.dim < 2) config_error("gue.dim must be >= 2");
  return cfg;
}

SpinChainConfig spin_config_from_json(const json& j) {
  SpinChainConfig cfg;
  cfg.num_spins = get_as<int>(j, "M");
  cfg.blocks = get_as<std::vector<std::vector<int>>>(j, "blocks");
  cfg.omega0 = get_as<double>(j, "omega0");
  cfg.omega = get_as<double>(j, "omega");
  if (j.contains("hbar")) cfg.hbar = get_as<double>(j, "hbar");
  try {
    validate(cfg);
  } catch (const QslError& e) {
    config_error(std::string("spin config: ") + e.what());
  }
  return cfg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    config_error(path + ": " + e.what());
  }
}

std::string bound_csv_row(const BoundReport& r) {
  std::string row;
  row += format_double(r.tau_actual) + ",";
  row += format_double(r.tau_mt) + ",";
  row += format_double(r.tau_tqsl) + ",";
  row += format_double(r.delta) + ",";
  row += format_double(r.quadrature.bound_error) + ",";
  row += r.validity_clean ? "clean" : "flagged";
  return row;
}

std::string bound_csv(const std::vector<BoundReport>& rows) {
  std::string out = kBoundCsvHeader;
  out += "\n";
  for (const auto& r : rows) {
    out += bound_csv_row(r);
    out += "\n";
  }
  return out;
}

}  // namespace qsl::io
