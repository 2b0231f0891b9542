// SPDX-License-Identifier: Apache-2.0
//
// mbwa-coexist: interference ceilings and coexistence checks for IEEE 802.20 terminals
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbwa/benchmark.hpp"
#include "mbwa/cli.hpp"
#include "mbwa/error.hpp"
#include "mbwa/interference_field.hpp"
#include "mbwa/io.hpp"
#include "mbwa/radiometry.hpp"
#include "mbwa/rate_model.hpp"
#include "mbwa/reproduce.hpp"

namespace py = pybind11;
using namespace mbwa;

namespace {

const radiometry::ReceiverNoiseModel &default_receiver() { return io::bundled_parameters().receiver; }
const benchmark::DegradationBudget &default_budget() { return io::bundled_parameters().budget; }

field::InterferenceScenario scenario_from_text(const std::string &text)
{
    return io::scenario_from_json(io::parse_json_text(text, "scenario"));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "IEEE 802.20 interference ceilings, sweeps and coexistence verdicts";
    m.attr("__version__") = "1.0.0";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::enum_<rates::Mode>(m, "Mode").value("OFDMA", rates::Mode::Ofdma).value("MC625K", rates::Mode::Mc625k);
    py::enum_<rates::Duplexing>(m, "Duplexing")
        .value("FDD", rates::Duplexing::Fdd)
        .value("TDD", rates::Duplexing::Tdd);
    py::enum_<rates::Link>(m, "Link").value("DL", rates::Link::Downlink).value("UL", rates::Link::Uplink);
    py::enum_<rates::Extremity>(m, "Extremity")
        .value("LOW", rates::Extremity::Low)
        .value("HIGH", rates::Extremity::High);
    py::enum_<rates::Mobility>(m, "Mobility")
        .value("PEDESTRIAN", rates::Mobility::Pedestrian)
        .value("HIGHSPEED", rates::Mobility::Highspeed);

    py::class_<radiometry::ReceiverNoiseModel>(m, "ReceiverNoiseModel")
        .def(py::init([](double t_ref_k, double t_ant_k, double nf_db, double g_ant_db, double g_amp_db) {
                 radiometry::ReceiverNoiseModel model{t_ref_k, t_ant_k, nf_db, g_ant_db, g_amp_db};
                 model.validate();
                 return model;
             }),
             py::arg("t_ref_k") = 290.0, py::arg("t_ant_k") = 288.0, py::arg("nf_db") = 10.0,
             py::arg("g_ant_db") = 0.0, py::arg("g_amp_db") = 0.0)
        .def_readwrite("t_ref_k", &radiometry::ReceiverNoiseModel::t_ref_k)
        .def_readwrite("t_ant_k", &radiometry::ReceiverNoiseModel::t_ant_k)
        .def_readwrite("nf_db", &radiometry::ReceiverNoiseModel::nf_db)
        .def_readwrite("g_ant_db", &radiometry::ReceiverNoiseModel::g_ant_db)
        .def_readwrite("g_amp_db", &radiometry::ReceiverNoiseModel::g_amp_db);

    py::class_<radiometry::LossReport>(m, "LossReport")
        .def_readonly("loss_snr", &radiometry::LossReport::loss_snr)
        .def_readonly("loss_sinr", &radiometry::LossReport::loss_sinr)
        .def_readonly("degradation", &radiometry::LossReport::degradation);

    py::class_<rates::OperatingPoint>(m, "OperatingPoint")
        .def(py::init([](rates::Mode mode, rates::Duplexing duplexing, double bandwidth_mhz, rates::Link link,
                         rates::Extremity extremity, rates::Mobility mobility) {
                 rates::OperatingPoint p{mode, duplexing, bandwidth_mhz * 1e6, link, extremity, mobility};
                 p.validate();
                 return p;
             }),
             py::arg("mode") = rates::Mode::Ofdma, py::arg("duplexing") = rates::Duplexing::Fdd,
             py::arg("bandwidth_mhz") = 2.5, py::arg("link") = rates::Link::Downlink,
             py::arg("extremity") = rates::Extremity::Low, py::arg("mobility") = rates::Mobility::Pedestrian)
        .def_readwrite("mode", &rates::OperatingPoint::mode)
        .def_readwrite("duplexing", &rates::OperatingPoint::duplexing)
        .def_readwrite("bandwidth_hz", &rates::OperatingPoint::bandwidth_hz)
        .def_readwrite("link", &rates::OperatingPoint::link)
        .def_readwrite("extremity", &rates::OperatingPoint::extremity)
        .def_readwrite("mobility", &rates::OperatingPoint::mobility);

    py::class_<benchmark::DegradationBudget>(m, "DegradationBudget")
        .def(py::init([](double d_max_db) {
                 benchmark::DegradationBudget b{d_max_db};
                 b.validate();
                 return b;
             }),
             py::arg("d_max_db") = 0.5)
        .def_readwrite("d_max_db", &benchmark::DegradationBudget::d_max_db);

    py::class_<rates::RateTable>(m, "RateTable")
        .def("eta", &rates::RateTable::eta)
        .def("set_eta", &rates::RateTable::set_eta);

    py::class_<benchmark::CeilingComponents>(m, "CeilingComponents")
        .def_readonly("constant_db", &benchmark::CeilingComponents::constant_db)
        .def_readonly("eta_db", &benchmark::CeilingComponents::eta_db)
        .def_readonly("rate_db", &benchmark::CeilingComponents::rate_db)
        .def_readonly("degradation_db", &benchmark::CeilingComponents::degradation_db)
        .def_readonly("temperature_db", &benchmark::CeilingComponents::temperature_db);

    py::class_<benchmark::BenchmarkResult>(m, "BenchmarkResult")
        .def_readonly("point", &benchmark::BenchmarkResult::point)
        .def_readonly("rate_bps", &benchmark::BenchmarkResult::rate_bps)
        .def_readonly("eta_bps_hz", &benchmark::BenchmarkResult::eta_bps_hz)
        .def_readonly("iagg_max_dbm", &benchmark::BenchmarkResult::iagg_max_dbm)
        .def_readonly("iagg_max_w", &benchmark::BenchmarkResult::iagg_max_w)
        .def_readonly("components", &benchmark::BenchmarkResult::components);

    py::class_<field::Verdict>(m, "Verdict")
        .def_readonly("iagg_dbm", &field::Verdict::iagg_dbm)
        .def_readonly("ceiling_dbm", &field::Verdict::ceiling_dbm)
        .def_readonly("margin_db", &field::Verdict::margin_db)
        .def_readonly("passed", &field::Verdict::pass);

    py::class_<field::OutageReport>(m, "OutageReport")
        .def_readonly("trials", &field::OutageReport::trials)
        .def_readonly("failures", &field::OutageReport::failures)
        .def_readonly("outage_probability", &field::OutageReport::outage_probability)
        .def_readonly("ceiling_dbm", &field::OutageReport::ceiling_dbm)
        .def_readonly("margin_min_db", &field::OutageReport::margin_min_db)
        .def_readonly("margin_median_db", &field::OutageReport::margin_median_db)
        .def_readonly("margin_max_db", &field::OutageReport::margin_max_db);

    py::class_<field::InterferenceScenario>(m, "InterferenceScenario")
        .def_static("from_json", &scenario_from_text, py::arg("text"))
        .def_static("load", [](const std::string &path) { return io::load_scenario(path); }, py::arg("path"));

    py::class_<reproduce::Check>(m, "Check")
        .def_readonly("id", &reproduce::Check::id)
        .def_readonly("description", &reproduce::Check::description)
        .def_readonly("measured", &reproduce::Check::measured)
        .def_readonly("expected", &reproduce::Check::expected)
        .def_readonly("tolerance", &reproduce::Check::tolerance)
        .def_readonly("passed", &reproduce::Check::pass);

    m.def("default_rate_table", [] { return io::default_rate_table(); });
    m.def("default_receiver", &default_receiver);
    m.def("default_budget", &default_budget);

    m.def("amp_temperature", &radiometry::amp_temperature, py::arg("model"));
    m.def(
        "system_noise_power_w",
        [](const radiometry::ReceiverNoiseModel &model, double bandwidth_hz) {
            return radiometry::system_noise_power(model, bandwidth_hz).watts();
        },
        py::arg("model"), py::arg("bandwidth_hz"));
    m.def(
        "losses",
        [](double i_agg_w, const radiometry::ReceiverNoiseModel &model, double bandwidth_hz) {
            return radiometry::losses({i_agg_w, radiometry::PowerRole::Interference}, model, bandwidth_hz);
        },
        py::arg("i_agg_w"), py::arg("model"), py::arg("bandwidth_hz"));
    m.def(
        "iagg_from_degradation_w",
        [](double d_db, const radiometry::ReceiverNoiseModel &model, double bandwidth_hz) {
            return radiometry::iagg_from_degradation(d_db, model, bandwidth_hz).watts();
        },
        py::arg("d_db"), py::arg("model"), py::arg("bandwidth_hz"));

    m.def("spectral_efficiency", &rates::spectral_efficiency, py::arg("table"), py::arg("mobility"),
          py::arg("link"));
    m.def("peak_rate_bps", &rates::peak_rate, py::arg("table"), py::arg("point"));

    m.def(
        "iagg_max",
        [](const rates::OperatingPoint &point, const rates::RateTable *table,
           const radiometry::ReceiverNoiseModel *noise, const benchmark::DegradationBudget *budget,
           bool paper_exact) {
            return benchmark::iagg_max(point, table ? *table : io::default_rate_table(),
                                       noise ? *noise : default_receiver(), budget ? *budget : default_budget(),
                                       paper_exact ? benchmark::ConstantForm::PaperRounded
                                                   : benchmark::ConstantForm::Exact);
        },
        py::arg("point"), py::arg("table") = nullptr, py::arg("noise") = nullptr, py::arg("budget") = nullptr,
        py::arg("paper_exact") = false);
    m.def(
        "benchmark_sweep",
        [](rates::Mode mode, rates::Duplexing duplexing, rates::Link link, rates::Extremity extremity,
           rates::Mobility mobility, std::vector<double> grid_mhz) {
            for (auto &g : grid_mhz)
                g *= 1e6;
            return benchmark::benchmark_sweep({mode, duplexing, link, extremity, mobility}, grid_mhz,
                                              io::default_rate_table(), default_receiver(), default_budget());
        },
        py::arg("mode"), py::arg("duplexing"), py::arg("link"), py::arg("extremity"), py::arg("mobility"),
        py::arg("grid_mhz"));

    m.def(
        "aggregate_interference_w",
        [](const field::InterferenceScenario &s) { return field::aggregate_interference(s).watts(); },
        py::arg("scenario"));
    m.def(
        "coexistence_verdict",
        [](const field::InterferenceScenario &s, const rates::OperatingPoint &point) {
            return field::coexistence_verdict(s, point, io::default_rate_table(), default_receiver(),
                                              default_budget());
        },
        py::arg("scenario"), py::arg("point"));
    m.def(
        "monte_carlo_outage",
        [](const field::InterferenceScenario &s, int trials, const rates::OperatingPoint &point) {
            py::gil_scoped_release release;
            return field::monte_carlo_outage(s, trials, point, io::default_rate_table(), default_receiver(),
                                             default_budget());
        },
        py::arg("scenario"), py::arg("trials"), py::arg("point"));

    m.def("run_checks", [] { return reproduce::run_checks(reproduce::default_inputs()); });
    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
