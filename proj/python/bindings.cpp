// Copyright 2026 The Authors.
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mimo_select/errors.hpp"
#include "mimo_select/report.hpp"

namespace py = pybind11;
using namespace mimo;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2) throw InvalidInput("expected a 2-D array");
  const auto rows = static_cast<int>(a.shape(0));
  const auto cols = static_cast<int>(a.shape(1));
  return ComplexMatrix(rows, cols, std::vector<Complex>(a.data(), a.data() + a.size()));
}

py::array_t<Complex> to_array(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

MimoChannel to_channel(const ComplexArray& a) { return MimoChannel(to_matrix(a)); }

HermitianForm to_form(const ComplexArray& a) { return HermitianForm(to_matrix(a)); }

std::vector<int> members(const SubsetIndex& s) { return s.members(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MIMO capacity, antenna subset selection and bound verification";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::enum_<Method>(m, "Method")
      .value("EXHAUSTIVE", Method::kExhaustive)
      .value("GREEDY", Method::kGreedy);
  py::enum_<Side>(m, "Side").value("TX", Side::kTx).value("RX", Side::kRx);
  py::enum_<PruneOrder>(m, "PruneOrder")
      .value("RX_FIRST", PruneOrder::kRxFirst)
      .value("TX_FIRST", PruneOrder::kTxFirst);

  py::class_<CapacityReport>(m, "CapacityReport")
      .def_readonly("capacity_bits", &CapacityReport::capacity_bits)
      .def_readonly("power", &CapacityReport::power)
      .def_readonly("n_t", &CapacityReport::n_t)
      .def_readonly("n_r", &CapacityReport::n_r)
      .def_readonly("spectrum", &CapacityReport::spectrum);

  py::class_<RemovalStep>(m, "RemovalStep")
      .def(py::init([](Side side, int removed, int remaining, double capacity_after) {
             return RemovalStep{side, removed, remaining, capacity_after};
           }),
           py::arg("side"), py::arg("removed"), py::arg("remaining"), py::arg("capacity_after"))
      .def_readonly("side", &RemovalStep::side)
      .def_readonly("removed", &RemovalStep::removed)
      .def_readonly("remaining", &RemovalStep::remaining)
      .def_readonly("capacity_after", &RemovalStep::capacity_after);

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_property_readonly("tx", [](const SelectionResult& r) { return members(r.selection.tx); })
      .def_property_readonly("rx", [](const SelectionResult& r) { return members(r.selection.rx); })
      .def_readonly("capacity_bits", &SelectionResult::capacity_bits)
      .def_readonly("method", &SelectionResult::method)
      .def_readonly("trace", &SelectionResult::trace);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("theorem", &BoundReport::theorem)
      .def_readonly("full_capacity_bits", &BoundReport::full_capacity_bits)
      .def_readonly("fraction", &BoundReport::fraction)
      .def_readonly("gap_bits", &BoundReport::gap_bits)
      .def_readonly("bound_bits", &BoundReport::bound_bits)
      .def_readonly("achieved_bits", &BoundReport::achieved_bits)
      .def_readonly("slack_bits", &BoundReport::slack_bits)
      .def_readonly("satisfied", &BoundReport::satisfied);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_property_readonly("identity", [](const IdentityReport& r) { return to_string(r.identity); })
      .def_readonly("n", &IdentityReport::n)
      .def_readonly("k", &IdentityReport::k)
      .def_readonly("max_abs_error", &IdentityReport::max_abs_error)
      .def_readonly("max_rel_error", &IdentityReport::max_rel_error)
      .def_readonly("tolerance", &IdentityReport::tolerance)
      .def_readonly("passed", &IdentityReport::passed);

  // Matrix core.
  m.def("gram", [](const ComplexArray& h, double p) { return to_array(gram(to_matrix(h), p).matrix()); },
        py::arg("h"), py::arg("power"), "I + P H H^H");
  m.def("dual_gram",
        [](const ComplexArray& h, double p) { return to_array(dual_gram(to_matrix(h), p).matrix()); },
        py::arg("h"), py::arg("power"), "I + P H^H H");
  m.def("principal_submatrix",
        [](const ComplexArray& a, std::vector<int> subset) {
          const auto f = to_form(a);
          return to_array(principal_submatrix(f, SubsetIndex(f.dim(), std::move(subset))).matrix());
        },
        py::arg("a"), py::arg("subset"), "Rows and columns indexed by 1-based `subset`");
  m.def("eigenvalues", [](const ComplexArray& a) { return eigenvalues(to_form(a)); }, py::arg("a"));
  m.def("log_det", [](const ComplexArray& a) { return log_det(to_form(a)); }, py::arg("a"));
  m.def("char_poly", [](const ComplexArray& a) { return char_poly(to_form(a)).coeffs(); },
        py::arg("a"), "Coefficients of det(xI - A), constant term first");
  m.def("poly_derivative",
        [](std::vector<double> coeffs, int order) {
          return poly_derivative(Polynomial(std::move(coeffs)), order).coeffs();
        },
        py::arg("coeffs"), py::arg("order"));

  // Channels.
  m.def("capacity", [](const ComplexArray& h, double p) { return capacity(to_channel(h), p); },
        py::arg("h"), py::arg("power"));
  m.def("gen_all_ones", [](int n_t, int n_r) { return to_array(gen_all_ones(n_t, n_r).matrix()); },
        py::arg("n_t"), py::arg("n_r"));
  m.def("gen_parallel", [](int n) { return to_array(gen_parallel(n).matrix()); }, py::arg("n"));
  m.def("gen_gaussian",
        [](int n_t, int n_r, std::uint64_t seed) { return to_array(gen_gaussian(n_t, n_r, seed).matrix()); },
        py::arg("n_t"), py::arg("n_r"), py::arg("seed"));
  m.def("load_channel",
        [](const std::filesystem::path& path) { return to_array(load_channel(path).matrix()); },
        py::arg("path"));
  m.def("save_channel",
        [](const ComplexArray& h, const std::filesystem::path& path, std::optional<double> hint) {
          save_channel(to_channel(h), path, hint);
        },
        py::arg("h"), py::arg("path"), py::arg("power_hint") = py::none());

  // Selection.
  m.def("exhaustive_best",
        [](const ComplexArray& h, double p, int k_t, int k_r, std::uint64_t cap) {
          const auto ch = to_channel(h);
          py::gil_scoped_release release;
          return exhaustive_best(ch, p, k_t, k_r, cap);
        },
        py::arg("h"), py::arg("power"), py::arg("k_t"), py::arg("k_r"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("greedy_prune",
        [](const ComplexArray& h, double p, int k_t, int k_r, PruneOrder order) {
          const auto ch = to_channel(h);
          py::gil_scoped_release release;
          return greedy_prune(ch, p, k_t, k_r, order);
        },
        py::arg("h"), py::arg("power"), py::arg("k_t"), py::arg("k_r"),
        py::arg("order") = PruneOrder::kRxFirst);
  m.def("per_step_ratio_check",
        [](double initial, const std::vector<RemovalStep>& trace) {
          return per_step_ratio_check(initial, trace);
        },
        py::arg("initial_capacity"), py::arg("trace"));
  m.def("theorem1_bound", &theorem1_bound, py::arg("full"), py::arg("k_t"), py::arg("k_r"),
        py::arg("achieved_bits"));
  m.def("theorem2_bound", &theorem2_bound, py::arg("full"), py::arg("k_t"), py::arg("k_r"),
        py::arg("achieved_bits"));
  m.def("gap_constant_bits", &gap_constant_bits, py::arg("n_t"), py::arg("n_r"), py::arg("k_t"),
        py::arg("k_r"));

  // Identities.
  m.def("sum_subset_charpolys",
        [](const ComplexArray& a, int k) { return sum_subset_charpolys(to_form(a), k).coeffs(); },
        py::arg("a"), py::arg("k"));
  m.def("verify_property1",
        [](const ComplexArray& a, int k, double tol) { return verify_property1(to_form(a), k, tol); },
        py::arg("a"), py::arg("k"), py::arg("tol") = 1e-8);
  m.def("verify_induction_step",
        [](const ComplexArray& a, int k, double tol) { return verify_induction_step(to_form(a), k, tol); },
        py::arg("a"), py::arg("k"), py::arg("tol") = 1e-8);
  m.def("verify_symmetric_coeff",
        [](const ComplexArray& a, int k, double tol) { return verify_symmetric_coeff(to_form(a), k, tol); },
        py::arg("a"), py::arg("k"), py::arg("tol") = 1e-8);
  m.def("verify_avg_det_bound",
        [](const ComplexArray& a, double tol) { return verify_avg_det_bound(to_form(a), tol); },
        py::arg("a"), py::arg("tol") = 1e-9);
  m.def("verify_case2_tuple_count", &verify_case2_tuple_count, py::arg("n_r"), py::arg("n_t"),
        py::arg("k_r"));

  // Harness runs, returned as the same JSON documents the CLI prints.
  m.def("_verify_json",
        [](int theorem, int trials, int max_n, std::vector<double> powers, std::uint64_t seed,
           Method method) {
          VerifyConfig cfg;
          cfg.theorem = theorem;
          cfg.trials = trials;
          cfg.max_n = max_n;
          cfg.powers = std::move(powers);
          cfg.seed = seed;
          cfg.method = method;
          VerificationRun run;
          {
            py::gil_scoped_release release;
            run = run_verification(cfg);
          }
          return document("verify", run).dump();
        });
  m.def("_identity_json", [](int n, int k, int trials, std::uint64_t seed, double tol) {
    IdentityConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.tol = tol;
    IdentityRun run;
    {
      py::gil_scoped_release release;
      run = run_identities(cfg);
    }
    return document("identity", run).dump();
  });
  m.def("_tight_json", [](const std::string& tight_case, int n_t, int n_r, int k_t, int k_r,
                          double power) {
    TightCase c;
    if (tight_case == "all-ones") {
      c = TightCase::kAllOnesLowSnr;
    } else if (tight_case == "parallel") {
      c = TightCase::kParallel;
    } else {
      throw InvalidInput("case must be \"all-ones\" or \"parallel\"");
    }
    return document("tight", run_tight(c, n_t, n_r, k_t, k_r, power)).dump();
  });
}
