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

#include "mbwa/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbwa/error.hpp"
#include "mbwa/interference_field.hpp"
#include "mbwa/reproduce.hpp"
#include "mbwa/units.hpp"

namespace mbwa::cli {

namespace {

using nlohmann::json;

void emit(const RunConfig &config, const std::string &content, std::ostream &out)
{
    if (config.out)
        io::write_atomic(*config.out, content);
    else
        out << content;
}

template <class T>
std::vector<T> or_single(const std::vector<T> &values, T fallback)
{
    return values.empty() ? std::vector<T>{fallback} : values;
}

std::string fixed6(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string sci(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

field::InterferenceScenario load_scenario(const RunConfig &config)
{
    field::InterferenceScenario scenario;
    if (config.scenario_text)
        scenario = io::scenario_from_json(io::parse_json_text(*config.scenario_text, "scenario"));
    else if (config.scenario_path)
        scenario = io::load_scenario(*config.scenario_path);
    else
        throw ValidationError("--scenario: a scenario file is required");
    if (config.seed) {
        auto *disc = std::get_if<field::UniformDiscPlacement>(&scenario.placement);
        if (disc)
            disc->seed = *config.seed;
    }
    return scenario;
}

int cmd_budget(const RunConfig &config, std::ostream &out)
{
    const auto &p = config.params;
    const auto r = benchmark::iagg_max(config.point, p.table, p.receiver, p.budget, config.constant);
    const auto &c = r.components;
    std::string content;
    if (config.format == Format::Json) {
        content = io::to_json(r).dump(2) + "\n";
    } else if (config.format == Format::Csv) {
        content = "iagg_max_dbm,iagg_max_w,constant_db,eta_db,rate_db,degradation_db,temperature_db,"
                  "bandwidth_mhz,rate_mbps,eta_bps_hz,mode,duplexing,link,extremity,mobility\n";
        content += io::format_sig6(r.iagg_max_dbm) + "," + io::format_sig6(r.iagg_max_w) + "," +
                   io::format_sig6(c.constant_db) + "," + io::format_sig6(c.eta_db) + "," +
                   io::format_sig6(c.rate_db) + "," + io::format_sig6(c.degradation_db) + "," +
                   io::format_sig6(c.temperature_db) + "," + io::format_sig6(r.point.bandwidth_hz / kHzPerMHz) + "," +
                   io::format_sig6(r.rate_bps / kBpsPerMbps) + "," + io::format_sig6(r.eta_bps_hz) + "," +
                   std::string(rates::to_string(r.point.mode)) + "," +
                   std::string(rates::to_string(r.point.duplexing)) + "," +
                   std::string(rates::to_string(r.point.link)) + "," +
                   std::string(rates::to_string(r.point.extremity)) + "," +
                   std::string(rates::to_string(r.point.mobility)) + "\n";
    } else {
        std::ostringstream s;
        s << "operating point: " << rates::to_string(r.point.mode) << " " << rates::to_string(r.point.duplexing)
          << " " << io::format_sig6(r.point.bandwidth_hz / kHzPerMHz) << " MHz " << rates::to_string(r.point.link)
          << " " << rates::to_string(r.point.extremity) << " " << rates::to_string(r.point.mobility) << "\n"
          << "rate_mbps:       " << io::format_sig6(r.rate_bps / kBpsPerMbps) << "\n"
          << "eta_bps_hz:      " << io::format_sig6(r.eta_bps_hz) << "\n"
          << "components:\n"
          << "  constant_db     " << fixed6(c.constant_db) << "\n"
          << "  eta_db          " << fixed6(c.eta_db) << "\n"
          << "  rate_db         " << fixed6(c.rate_db) << "\n"
          << "  degradation_db  " << fixed6(c.degradation_db) << "\n"
          << "  temperature_db  " << fixed6(c.temperature_db) << "\n"
          << "iagg_max_dbm:    " << fixed6(r.iagg_max_dbm) << "\n"
          << "iagg_max_w:      " << sci(r.iagg_max_w) << "\n";
        content = s.str();
    }
    emit(config, content, out);
    return kExitPass;
}

std::vector<double> grid_for(const RunConfig &config)
{
    if (config.grid_hz) {
        require(!config.grid_hz->empty(), "--grid: empty grid");
        return *config.grid_hz;
    }
    return rates::default_grid(config.point.mode, config.point.duplexing);
}

int finish_rows(std::size_t total, std::size_t failed, std::string_view what, std::ostream &err)
{
    if (failed > 0)
        err << what << ": " << failed << " of " << total << " rows failed validation and were omitted\n";
    return failed == total ? kExitError : kExitPass;
}

int cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const auto &p = config.params;
    p.budget.validate();
    const auto grid = grid_for(config);
    std::vector<io::CurveRecord> rows;
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_error;
    for (auto link : or_single(config.links, config.point.link))
        for (auto ext : or_single(config.extremities, config.point.extremity))
            for (auto mob : or_single(config.mobilities, config.point.mobility))
                for (double bw : grid) {
                    ++total;
                    const rates::OperatingPoint point{config.point.mode, config.point.duplexing, bw, link, ext, mob};
                    try {
                        rows.push_back(io::to_curve_record(
                            benchmark::iagg_max(point, p.table, p.receiver, p.budget, config.constant)));
                    } catch (const ValidationError &e) {
                        if (first_error.empty())
                            first_error = e.what();
                        ++failed;
                    }
                }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const io::CurveRecord &a, const io::CurveRecord &b) { return a.bandwidth_mhz < b.bandwidth_mhz; });
    const int code = finish_rows(total, failed, "sweep", err);
    if (code != kExitPass) {
        err << "error: " << first_error << "\n";
        return code;
    }
    emit(config, config.format == Format::Json ? io::curve_json(rows).dump(2) + "\n" : io::curve_csv(rows), out);
    return code;
}

int cmd_rates(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const auto grid = grid_for(config);
    struct Row
    {
        double bandwidth_hz;
        double rate_bps;
        rates::Link link;
        rates::Extremity extremity;
    };
    std::vector<Row> rows;
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_error;
    for (auto link : or_single(config.links, config.point.link))
        for (auto ext : or_single(config.extremities, config.point.extremity))
            for (double bw : grid) {
                ++total;
                const rates::OperatingPoint point{config.point.mode, config.point.duplexing, bw, link, ext,
                                                  config.point.mobility};
                try {
                    rows.push_back({bw, rates::peak_rate(config.params.table, point), link, ext});
                } catch (const ValidationError &e) {
                    if (first_error.empty())
                        first_error = e.what();
                    ++failed;
                }
            }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) { return a.bandwidth_hz < b.bandwidth_hz; });
    const int code = finish_rows(total, failed, "rates", err);
    if (code != kExitPass) {
        err << "error: " << first_error << "\n";
        return code;
    }
    const auto mode = std::string(rates::to_string(config.point.mode));
    const auto dup = std::string(rates::to_string(config.point.duplexing));
    std::string content;
    if (config.format == Format::Json) {
        json arr = json::array();
        for (const auto &r : rows)
            arr.push_back({{"bandwidth_mhz", r.bandwidth_hz / kHzPerMHz},
                           {"rate_mbps", r.rate_bps / kBpsPerMbps},
                           {"mode", mode},
                           {"duplexing", dup},
                           {"link", rates::to_string(r.link)},
                           {"extremity", rates::to_string(r.extremity)}});
        content = arr.dump(2) + "\n";
    } else {
        content = std::string(io::kRateCsvHeader) + "\n";
        for (const auto &r : rows)
            content += io::format_sig6(r.bandwidth_hz / kHzPerMHz) + "," + io::format_sig6(r.rate_bps / kBpsPerMbps) +
                       "," + mode + "," + dup + "," + std::string(rates::to_string(r.link)) + "," +
                       std::string(rates::to_string(r.extremity)) + "\n";
    }
    emit(config, content, out);
    return code;
}

int cmd_simulate(const RunConfig &config, std::ostream &out)
{
    const auto &p = config.params;
    const auto scenario = load_scenario(config);
    const auto offenders = field::realize_placement(scenario);
    const auto verdict = field::coexistence_verdict(scenario, config.point, p.table, p.receiver, p.budget,
                                                    config.constant);
    json doc = io::to_json(verdict);
    doc["operating_point"] = io::to_json(config.point);
    doc["offender_count"] = offenders.size();
    emit(config, doc.dump(2) + "\n", out);
    return verdict.pass ? kExitPass : kExitFail;
}

int cmd_outage(const RunConfig &config, std::ostream &out)
{
    const auto &p = config.params;
    require(std::isfinite(config.max_outage) && config.max_outage >= 0.0 && config.max_outage <= 1.0,
            "--max-outage: must be within [0, 1]");
    const auto scenario = load_scenario(config);
    const auto report = field::monte_carlo_outage(scenario, config.trials, config.point, p.table, p.receiver,
                                                  p.budget, config.constant);
    json doc = io::to_json(report);
    doc["operating_point"] = io::to_json(config.point);
    doc["max_outage"] = config.max_outage;
    const bool pass = report.outage_probability <= config.max_outage;
    doc["pass"] = pass;
    emit(config, doc.dump(2) + "\n", out);
    return pass ? kExitPass : kExitFail;
}

int cmd_reproduce(const RunConfig &config, std::ostream &out)
{
    const auto &p = config.params;
    const auto checks = reproduce::run_checks({p.table, p.receiver, p.budget});
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
    std::string content;
    if (config.format == Format::Json) {
        json arr = json::array();
        for (const auto &c : checks)
            arr.push_back({{"id", c.id},
                           {"description", c.description},
                           {"measured", c.measured},
                           {"expected", c.expected},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
        content = json{{"checks", arr}, {"passed", passed}, {"total", checks.size()}}.dump(2) + "\n";
    } else {
        for (const auto &c : checks)
            content += reproduce::format_check(c) + "\n";
        content += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    }
    emit(config, content, out);
    return passed == static_cast<long>(checks.size()) ? kExitPass : kExitFail;
}

template <class T, class Parse>
std::vector<T> parse_choice(const std::string &value, std::initializer_list<T> all, Parse parse)
{
    if (value == "all")
        return all;
    return {parse(value)};
}

} // namespace

int execute(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        switch (config.command) {
        case Command::Budget:
            return cmd_budget(config, out);
        case Command::Sweep:
            return cmd_sweep(config, out, err);
        case Command::Rates:
            return cmd_rates(config, out, err);
        case Command::Simulate:
            return cmd_simulate(config, out);
        case Command::Outage:
            return cmd_outage(config, out);
        case Command::Reproduce:
            return cmd_reproduce(config, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

std::vector<double> parse_grid_mhz(const std::string &spec)
{
    auto to_number = [&](const std::string &s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            require(used == s.size() && std::isfinite(v), "bad");
            return v;
        } catch (const std::exception &) {
            throw ValidationError("--grid: '" + s + "' is not a number");
        }
    };
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ':'))
            parts.push_back(part);
        require(parts.size() == 3, "--grid: range form is start:step:stop");
        const double start = to_number(parts[0]);
        const double step = to_number(parts[1]);
        const double stop = to_number(parts[2]);
        require(step > 0.0, "--grid: step must be positive");
        if (stop < start)
            return out;
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        require(count <= 1000000, "--grid: too many points");
        for (long i = 0; i < count; ++i)
            out.push_back((start + i * step) * kHzPerMHz);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(to_number(item) * kHzPerMHz);
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Interference ceilings and coexistence checks for IEEE 802.20 (MBWA) terminals", "mbwa-coexist"};
    app.require_subcommand(1, 1);

    struct Flags
    {
        std::string mode = "ofdma", link = "dl", extremity = "low", mobility = "pedestrian";
        std::optional<double> bandwidth_mhz, nf_db, t_ant, t_ref, dmax_db, max_outage;
        std::optional<std::string> duplexing, grid, params, scenario, out;
        std::optional<int> trials;
        std::optional<std::uint64_t> seed;
        std::vector<std::string> eta;
        std::string format;
        bool paper_exact = false;
    } f;

    const std::pair<const char *, const char *> commands[] = {
        {"budget", "Interference ceiling at one operating point, with its dB components"},
        {"sweep", "Ceiling curves over a bandwidth grid (CSV or JSON)"},
        {"rates", "Peak per-user data rate over a bandwidth grid"},
        {"simulate", "Coexistence verdict for a scenario file"},
        {"outage", "Monte-Carlo outage over a random-placement scenario"},
        {"reproduce", "Check the published numeric results against this build"},
    };
    for (const auto &[name, help] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--mode", f.mode, "ofdma | mc625k");
        sub->add_option("--duplexing", f.duplexing, "fdd | tdd (default: fdd, tdd for mc625k)");
        sub->add_option("--link", f.link, "dl | ul (sweep/rates: also 'all')");
        sub->add_option("--extremity", f.extremity, "low | high (sweep/rates: also 'all')");
        sub->add_option("--mobility", f.mobility, "pedestrian | highspeed (sweep: also 'all')");
        sub->add_option("--bandwidth-mhz", f.bandwidth_mhz, "Channel bandwidth in MHz");
        sub->add_option("--grid", f.grid, "Bandwidth grid in MHz: 'a,b,c' or 'start:step:stop'");
        sub->add_option("--nf-db", f.nf_db, "Noise figure override (dB)");
        sub->add_option("--t-ant", f.t_ant, "Antenna noise temperature override (K)");
        sub->add_option("--t-ref", f.t_ref, "Reference temperature override (K)");
        sub->add_option("--dmax-db", f.dmax_db, "Maximum degradation override (dB)");
        sub->add_flag("--paper-exact", f.paper_exact, "Use the rounded -138.6 dB constant");
        sub->add_option("--params", f.params, "Parameter file (JSON)");
        sub->add_option("--eta", f.eta, "Spectral efficiency override, e.g. highspeed:dl=2.0");
        sub->add_option("--scenario", f.scenario, "Scenario file (JSON)");
        sub->add_option("--trials", f.trials, "Monte-Carlo trials");
        sub->add_option("--seed", f.seed, "Seed for random placement");
        sub->add_option("--max-outage", f.max_outage, "Outage probability accepted as a pass");
        sub->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", f.out, "Output path (written atomically)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitError;
    }

    RunConfig config;
    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "budget")
            config.command = Command::Budget;
        else if (name == "sweep")
            config.command = Command::Sweep;
        else if (name == "rates")
            config.command = Command::Rates;
        else if (name == "simulate")
            config.command = Command::Simulate;
        else if (name == "outage")
            config.command = Command::Outage;
        else
            config.command = Command::Reproduce;

        if (f.params)
            config.params = io::load_parameters(*f.params);
        auto &rx = config.params.receiver;
        if (f.nf_db)
            rx.nf_db = *f.nf_db;
        if (f.t_ant)
            rx.t_ant_k = *f.t_ant;
        if (f.t_ref)
            rx.t_ref_k = *f.t_ref;
        rx.validate();
        if (f.dmax_db)
            config.params.budget.d_max_db = *f.dmax_db;
        config.params.budget.validate();
        for (const auto &spec : f.eta) {
            const auto colon = spec.find(':');
            const auto eq = spec.find('=');
            require(colon != std::string::npos && eq != std::string::npos && colon < eq,
                    "--eta: expected mobility:link=value, got '" + spec + "'");
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(spec.substr(eq + 1), &used);
            } catch (const std::exception &) {
                throw ValidationError("--eta: bad value in '" + spec + "'");
            }
            config.params.table.set_eta(rates::parse_mobility(spec.substr(0, colon)),
                                        rates::parse_link(spec.substr(colon + 1, eq - colon - 1)), value);
        }
        config.constant = f.paper_exact ? benchmark::ConstantForm::PaperRounded : benchmark::ConstantForm::Exact;

        const bool expands = config.command == Command::Sweep || config.command == Command::Rates;
        auto &p = config.point;
        p.mode = rates::parse_mode(f.mode);
        if (f.duplexing)
            p.duplexing = rates::parse_duplexing(*f.duplexing);
        else
            p.duplexing = p.mode == rates::Mode::Mc625k ? rates::Duplexing::Tdd : rates::Duplexing::Fdd;
        if (expands) {
            config.links = parse_choice(f.link, {rates::Link::Downlink, rates::Link::Uplink}, rates::parse_link);
            config.extremities =
                parse_choice(f.extremity, {rates::Extremity::Low, rates::Extremity::High}, rates::parse_extremity);
            config.mobilities = parse_choice(f.mobility, {rates::Mobility::Pedestrian, rates::Mobility::Highspeed},
                                             rates::parse_mobility);
            p.link = config.links.front();
            p.extremity = config.extremities.front();
            p.mobility = config.mobilities.front();
        } else {
            p.link = rates::parse_link(f.link);
            p.extremity = rates::parse_extremity(f.extremity);
            p.mobility = rates::parse_mobility(f.mobility);
        }
        if (f.bandwidth_mhz)
            p.bandwidth_hz = *f.bandwidth_mhz * kHzPerMHz;
        else if (p.mode == rates::Mode::Mc625k)
            p.bandwidth_hz = rates::kMc625kCarrierHz;
        else
            p.bandwidth_hz = p.duplexing == rates::Duplexing::Fdd ? 2.5e6 : 5e6;
        if (f.grid)
            config.grid_hz = parse_grid_mhz(*f.grid);

        if (f.scenario)
            config.scenario_path = *f.scenario;
        if (f.trials)
            config.trials = *f.trials;
        config.seed = f.seed;
        if (f.max_outage)
            config.max_outage = *f.max_outage;
        if (f.format == "csv")
            config.format = Format::Csv;
        else if (f.format == "json")
            config.format = Format::Json;
        if (f.out)
            config.out = *f.out;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return execute(config, out, err);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mbwa-coexist");
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace mbwa::cli
