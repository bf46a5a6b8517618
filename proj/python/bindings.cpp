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

// Python bindings. Matrices cross the boundary as complex128 NumPy arrays;
// structured results come back as dicts (JSON-compatible).

#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsl/ensembles.hpp"
#include "qsl/errors.hpp"
#include "qsl/experiments.hpp"
#include "qsl/io.hpp"
#include "qsl/property_suite.hpp"
#include "qsl/speed_limits.hpp"
#include "qsl/uncertainty.hpp"

namespace py = pybind11;
using namespace qsl;

namespace {

/// Round-trips through the JSON text form; results are small.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ProjectionSide side_from_string(const std::string& side) {
  if (side == "left") return ProjectionSide::kLeft;
  if (side == "right") return ProjectionSide::kRight;
  fail(ErrorCode::kInvalidArgument, "side must be 'left' or 'right', got '" + side + "'");
}

py::dict curve_to_dict(const std::vector<BoundReport>& rows) {
  std::vector<double> t, mt, tqsl, delta, err;
  std::vector<bool> clean;
  for (const auto& r : rows) {
    t.push_back(r.tau_actual);
    mt.push_back(r.tau_mt);
    tqsl.push_back(r.tau_tqsl);
    delta.push_back(r.delta);
    err.push_back(r.quadrature.bound_error);
    clean.push_back(r.validity_clean);
  }
  py::dict d;
  d["t"] = t;
  d["tau_mt"] = mt;
  d["tau_tqsl"] = tqsl;
  d["delta"] = delta;
  d["quad_error"] = err;
  d["clean"] = clean;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum speed limits tighter than Mandelstam-Tamm";

  // Messages start with the error name, e.g. "NonHermitianInput: ...".
  py::register_exception<QslError>(m, "QslError", PyExc_ValueError);

  m.def("sample_gue", [](Index dim, std::uint64_t seed) { return sample_gue({dim, seed}).matrix(); },
        py::arg("dim"), py::arg("seed"), "GUE matrix with density proportional to exp(-(D/2) Tr H^2).");
  m.def("random_basis", [](Index dim, std::uint64_t seed) { return random_basis(dim, seed).matrix(); },
        py::arg("dim"), py::arg("seed"), "Columns: eigenvectors of a GUE draw.");
  m.def("random_pure_state",
        [](Index dim, std::uint64_t seed) { return random_pure_state(dim, seed).amplitudes(); },
        py::arg("dim"), py::arg("seed"));
  m.def("random_density_matrix",
        [](Index dim, std::uint64_t seed, Index rank) { return random_density_matrix(dim, seed, rank).matrix(); },
        py::arg("dim"), py::arg("seed"), py::arg("rank") = 0);

  m.def("tighter_bound_pure",
        [](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& psi,
           const ComplexMatrix& basis) {
          return tighter_bound_pure(Observable(a), Observable(b), PureState(psi), OrthonormalBasis(basis));
        },
        py::arg("a"), py::arg("b"), py::arg("psi"), py::arg("basis"));
  m.def("tighter_bound_mixed",
        [](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& rho,
           const ComplexMatrix& basis, const std::string& side) {
          return tighter_bound_mixed(Observable(a), Observable(b), DensityMatrix(rho),
                                     OrthonormalBasis(basis), side_from_string(side));
        },
        py::arg("a"), py::arg("b"), py::arg("rho"), py::arg("basis"), py::arg("side") = "left");
  m.def("cross_term_mixed",
        [](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& rho) {
          return cross_term(Observable(a), Observable(b), DensityMatrix(rho));
        },
        py::arg("a"), py::arg("b"), py::arg("rho"));
  m.def("commutator_bound_mixed",
        [](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& rho) {
          return commutator_bound(Observable(a), Observable(b), DensityMatrix(rho));
        },
        py::arg("a"), py::arg("b"), py::arg("rho"));

  m.def("tqsl_pure",
        [](const ComplexMatrix& h, const ComplexVector& psi0, double tau, const ComplexMatrix& basis,
           int steps, double hbar) {
          return to_python(io::to_json(
              tqsl_pure(Observable(h), PureState(psi0), tau, OrthonormalBasis(basis), steps, hbar)));
        },
        py::arg("h"), py::arg("psi0"), py::arg("tau"), py::arg("basis"),
        py::arg("steps") = kDefaultSteps, py::arg("hbar") = 1.0);
  m.def("tqsl_mixed",
        [](const ComplexMatrix& h, const ComplexMatrix& rho0, double tau, const ComplexMatrix& basis,
           int steps, double hbar) {
          return to_python(io::to_json(
              tqsl_mixed(Observable(h), DensityMatrix(rho0), tau, OrthonormalBasis(basis), steps, hbar)));
        },
        py::arg("h"), py::arg("rho0"), py::arg("tau"), py::arg("basis"),
        py::arg("steps") = kDefaultSteps, py::arg("hbar") = 1.0);
  m.def("tqsl_curve_pure",
        [](const ComplexMatrix& h, const ComplexVector& psi0, double t_max, int steps,
           const ComplexMatrix& basis, double hbar) {
          const Trajectory traj = sample_trajectory(Observable(h), PureState(psi0), t_max, steps, hbar);
          return curve_to_dict(tqsl_curve(traj, OrthonormalBasis(basis)));
        },
        py::arg("h"), py::arg("psi0"), py::arg("t_max"), py::arg("steps"), py::arg("basis"),
        py::arg("hbar") = 1.0);

  m.def("spin_chain_hamiltonian",
        [](int num_spins, std::vector<std::vector<int>> blocks, double omega0, double omega, double hbar) {
          SpinChainConfig cfg{num_spins, std::move(blocks), omega0, omega, hbar};
          return spin_chain_hamiltonian(cfg).matrix();
        },
        py::arg("num_spins") = 2, py::arg("blocks") = std::vector<std::vector<int>>{{1, 2}},
        py::arg("omega0") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0);

  m.def("run_gue",
        [](Index dim, double t_max, int steps, std::vector<std::uint64_t> seeds,
           const std::string& basis, double hbar, const std::string& out) {
          ExperimentConfig cfg;
          cfg.kind = ExperimentKind::kGue;
          cfg.dim = dim;
          cfg.t_max = t_max;
          cfg.steps = steps;
          cfg.seeds = std::move(seeds);
          cfg.basis_mode = basis_mode_from_string(basis);
          cfg.hbar = hbar;
          cfg.output_path = out;
          ExperimentResult r;
          {
            py::gil_scoped_release release;
            r = run_experiment_gue(cfg);
          }
          return to_python(r.summary);
        },
        py::arg("dim") = 3, py::arg("t_max") = 3.0, py::arg("steps") = kDefaultSteps,
        py::arg("seeds") = std::vector<std::uint64_t>{0}, py::arg("basis") = "fixed-random",
        py::arg("hbar") = 1.0, py::arg("out") = "",
        "GUE sweep; returns the JSON summary as a dict.");

  m.def("run_property_suite",
        [](int trials, std::vector<Index> dims, std::uint64_t seed, bool inject) {
          PropertyConfig cfg{trials, std::move(dims), seed, inject};
          PropertyReport r;
          {
            py::gil_scoped_release release;
            r = run_property_suite(cfg);
          }
          return to_python(r.to_json());
        },
        py::arg("trials") = 100, py::arg("dims") = std::vector<Index>{2, 3, 4, 5, 6},
        py::arg("seed") = 0, py::arg("inject_non_hermitian") = false);
}
