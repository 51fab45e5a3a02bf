#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "stripperc/experiment.hpp"
#include "stripperc/svg.hpp"

namespace py = pybind11;
using namespace stripperc;

namespace {

using PyPoints = std::vector<std::array<double, 2>>;

Polyline from_py(const PyPoints& points) {
  Polyline out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p[0], p[1]});
  return out;
}

PyPoints to_py(const Polyline& points) {
  PyPoints out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p.x, p.y});
  return out;
}

std::tuple<int, int, int> state_tuple(const WHState& s) { return {s.s1, s.s2, s.s3}; }

}  // namespace

PYBIND11_MODULE(_stripperc, m) {
  m.doc() = "Strip-stability experiment on critical site percolation";

  py::class_<Domain>(m, "Domain")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Domain::n)
      .def_property_readonly("row_count", &Domain::row_count)
      .def_property_readonly("cell_count", &Domain::cell_count)
      .def_property_readonly("interior_count", &Domain::interior_count)
      .def_property_readonly("scale", &Domain::scale)
      .def_property_readonly("edge_length", &Domain::edge_length)
      .def("row_size", &Domain::row_size, py::arg("row"))
      .def("is_boundary",
           [](const Domain& d, int row, int index) { return d.is_boundary({row, index}); })
      .def("hex_center", [](const Domain& d, int row, int index) {
        const Point2D p = d.hex_center({row, index});
        return std::array<double, 2>{p.x, p.y};
      });

  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("n", &TrialResult::n)
      .def_readonly("k", &TrialResult::k)
      .def_readonly("trial", &TrialResult::trial)
      .def_readonly("distance", &TrialResult::distance)
      .def_readonly("first_path_len", &TrialResult::first_path_len)
      .def_readonly("second_path_len", &TrialResult::second_path_len)
      .def("__eq__", [](const TrialResult& a, const TrialResult& b) { return a == b; })
      .def("__repr__", [](const TrialResult& r) {
        return "TrialResult(n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) +
               ", trial=" + std::to_string(r.trial) + ", distance=" + std::to_string(r.distance) +
               ")";
      });

  py::class_<SampleStats>(m, "SampleStats")
      .def_readonly("n", &SampleStats::n)
      .def_readonly("k", &SampleStats::k)
      .def_readonly("trials", &SampleStats::trials)
      .def_readonly("median", &SampleStats::median)
      .def_readonly("msd", &SampleStats::msd)
      .def_readonly("epsilon_strip", &SampleStats::epsilon_strip)
      .def("__eq__", [](const SampleStats& a, const SampleStats& b) { return a == b; });

  m.def("build_domain", &build_domain, py::arg("n"));
  m.def(
      "resample_rows",
      [](int n, int k) {
        const RowSet rows = resample_rows(n, k);
        return std::make_tuple(rows.first, rows.last);
      },
      py::arg("n"), py::arg("k"), "Inclusive (first, last) rows redrawn for strip width k.");

  m.def(
      "wh_next",
      [](std::tuple<int, int, int> state) {
        WHState s{std::get<0>(state), std::get<1>(state), std::get<2>(state)};
        if (!s.valid()) throw py::value_error("Wichmann-Hill state out of range");
        const WHStep step = wh_next(s);
        return std::make_tuple(step.u, state_tuple(step.state));
      },
      py::arg("state"));
  m.def(
      "seed_for_trial",
      [](std::int64_t n, std::int64_t k, std::int64_t trial) {
        return state_tuple(seed_for_trial(n, k, trial));
      },
      py::arg("n"), py::arg("k"), py::arg("trial"));

  m.def(
      "simplify", [](const PyPoints& a, double eps) { return to_py(simplify(from_py(a), eps)); },
      py::arg("points"), py::arg("eps"));
  m.def(
      "dp_distance",
      [](const PyPoints& a, const PyPoints& b) { return dp_distance(from_py(a), from_py(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "brute_distance",
      [](const PyPoints& a, const PyPoints& b) { return brute_distance(from_py(a), from_py(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "path_distance",
      [](const PyPoints& a, const PyPoints& b, double eps) {
        return path_distance(from_py(a), from_py(b), eps);
      },
      py::arg("a"), py::arg("b"), py::arg("eps") = kDefaultEps);

  m.def(
      "trial_paths",
      [](int n, int k, int trial, double eps) {
        const TrialDetail d = simulate_trial(n, k, trial, eps);
        const Domain& domain = d.first.domain();
        return py::make_tuple(to_py(to_polyline(domain, d.first_path)),
                              to_py(to_polyline(domain, d.second_path)), d.result);
      },
      py::arg("n"), py::arg("k"), py::arg("trial"), py::arg("eps") = kDefaultEps,
      "(first path, second path, TrialResult) of one trial.");
  m.def("run_trial", &run_trial, py::arg("n"), py::arg("k"), py::arg("trial"),
        py::arg("eps") = kDefaultEps);
  m.def("run_trials", &run_trials, py::arg("n"), py::arg("k"), py::arg("trials"),
        py::arg("eps") = kDefaultEps, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("run_sample", &run_sample, py::arg("n"), py::arg("k"), py::arg("trials") = 250,
        py::arg("eps") = kDefaultEps, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_grid",
      [](std::vector<int> n_list, std::vector<int> k_list, int trials, double eps,
         double max_strip, int threads) {
        GridConfig config;
        config.n_list = std::move(n_list);
        config.k_list = std::move(k_list);
        config.trials = trials;
        config.eps = eps;
        config.max_strip = max_strip;
        config.threads = threads;
        py::gil_scoped_release release;
        return run_grid(config);
      },
      py::arg("n_list"), py::arg("k_list"), py::arg("trials") = 250,
      py::arg("eps") = kDefaultEps, py::arg("max_strip") = 1.0 / 16.0, py::arg("threads") = 1);

  m.def(
      "median", [](const std::vector<double>& v) { return median(v); }, py::arg("values"));
  m.def(
      "fit_power_law",
      [](const std::vector<double>& strip, const std::vector<double>& medians) {
        const PowerLawFit fit = fit_power_law(strip, medians);
        return std::make_tuple(fit.alpha, fit.prefactor, fit.r2);
      },
      py::arg("strip"), py::arg("medians"), "(alpha, prefactor, r2) of median ~ strip^alpha.");

  m.def(
      "render_svg",
      [](int n, int k, int trial, std::optional<std::pair<double, double>> clip, double eps) {
        RenderSpec spec;
        if (clip) spec.clip = ClipWindow{clip->first, clip->second};
        return render_svg(simulate_trial(n, k, trial, eps), spec);
      },
      py::arg("n"), py::arg("k"), py::arg("trial"), py::arg("clip") = py::none(),
      py::arg("eps") = kDefaultEps);
}
