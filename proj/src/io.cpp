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

#include "mbwa/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <system_error>

#include "mbwa/error.hpp"
#include "mbwa/units.hpp"

namespace mbwa::io {

using nlohmann::json;

namespace {

std::string join(std::string_view ctx, std::string_view key)
{
    if (ctx.empty())
        return std::string(key);
    return std::string(ctx) + "." + std::string(key);
}

void check_object(const json &j, std::string_view ctx)
{
    require(j.is_object(), std::string(ctx.empty() ? "document" : ctx) + ": expected an object");
}

void check_keys(const json &j, std::initializer_list<std::string_view> allowed, std::string_view ctx)
{
    for (const auto &[key, value] : j.items()) {
        const bool known = std::find(allowed.begin(), allowed.end(), key) != allowed.end();
        require(known, join(ctx, key) + ": unknown field");
    }
}

const json &field(const json &j, std::string_view key, std::string_view ctx)
{
    const auto it = j.find(key);
    require(it != j.end(), join(ctx, key) + ": missing required field");
    return *it;
}

double number(const json &j, std::string_view key, std::string_view ctx)
{
    const auto &v = field(j, key, ctx);
    require(v.is_number(), join(ctx, key) + ": expected a number");
    const double d = v.get<double>();
    require(std::isfinite(d), join(ctx, key) + ": must be finite");
    return d;
}

double number_or(const json &j, std::string_view key, double fallback, std::string_view ctx)
{
    return j.contains(key) ? number(j, key, ctx) : fallback;
}

int integer(const json &j, std::string_view key, std::string_view ctx)
{
    const auto &v = field(j, key, ctx);
    require(v.is_number_integer(), join(ctx, key) + ": expected an integer");
    return v.get<int>();
}

std::string text(const json &j, std::string_view key, std::string_view ctx)
{
    const auto &v = field(j, key, ctx);
    require(v.is_string(), join(ctx, key) + ": expected a string");
    return v.get<std::string>();
}

template <class Parse>
auto parse_enum(const json &j, std::string_view key, std::string_view ctx, Parse parse)
{
    const auto s = text(j, key, ctx);
    try {
        return parse(s);
    } catch (const ValidationError &e) {
        throw ValidationError(std::string(ctx) + ": " + e.what());
    }
}

void check_version(const json &doc)
{
    const int version = integer(doc, "version", "");
    require(version == kSchemaVersion, "version: unsupported schema version " + std::to_string(version));
}

// nlohmann/json keeps integer-valued doubles as "1.0"; good enough for the
// human-editable files.
json mhz(double hz) { return hz / kHzPerMHz; }

field::Placement placement_from_json(const json &p)
{
    const std::string ctx = "placement";
    check_object(p, ctx);
    const auto kind = text(p, "kind", ctx);
    if (kind == "explicit") {
        check_keys(p, {"kind"}, ctx);
        return field::ExplicitPlacement{};
    }
    if (kind == "grid") {
        check_keys(p, {"kind", "rows", "cols", "spacing_m", "eirp_dbm"}, ctx);
        return field::GridPlacement{integer(p, "rows", ctx), integer(p, "cols", ctx), number(p, "spacing_m", ctx),
                                    number(p, "eirp_dbm", ctx)};
    }
    if (kind == "uniform_disc") {
        check_keys(p, {"kind", "count", "r_min_m", "r_max_m", "seed", "eirp_dbm"}, ctx);
        const auto &seed = field(p, "seed", ctx);
        require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0),
                "placement.seed: mandatory non-negative integer for uniform_disc");
        return field::UniformDiscPlacement{integer(p, "count", ctx), number(p, "r_min_m", ctx),
                                           number(p, "r_max_m", ctx), seed.get<std::uint64_t>(),
                                           number(p, "eirp_dbm", ctx)};
    }
    throw ValidationError("placement.kind: expected 'explicit', 'grid' or 'uniform_disc', got '" + kind + "'");
}

json placement_to_json(const field::Placement &placement)
{
    if (const auto *g = std::get_if<field::GridPlacement>(&placement))
        return {{"kind", "grid"},
                {"rows", g->rows},
                {"cols", g->cols},
                {"spacing_m", g->spacing_m},
                {"eirp_dbm", g->eirp_dbm}};
    if (const auto *d = std::get_if<field::UniformDiscPlacement>(&placement))
        return {{"kind", "uniform_disc"}, {"count", d->count},   {"r_min_m", d->r_min_m},
                {"r_max_m", d->r_max_m},  {"seed", d->seed},     {"eirp_dbm", d->eirp_dbm}};
    return {{"kind", "explicit"}};
}

field::PathLossModel path_loss_from_json(const json &p)
{
    const std::string ctx = "path_loss";
    check_object(p, ctx);
    field::PathLossModel model;
    const auto kind = text(p, "kind", ctx);
    if (kind == "free_space") {
        check_keys(p, {"kind", "frequency_hz"}, ctx);
        model.kind = field::PathLossKind::FreeSpace;
    } else if (kind == "log_distance") {
        check_keys(p, {"kind", "frequency_hz", "exponent", "d0_m"}, ctx);
        model.kind = field::PathLossKind::LogDistance;
        model.exponent = number(p, "exponent", ctx);
        model.d0_m = number_or(p, "d0_m", 1.0, ctx);
    } else {
        throw ValidationError("path_loss.kind: expected 'free_space' or 'log_distance', got '" + kind + "'");
    }
    model.frequency_hz = number(p, "frequency_hz", ctx);
    model.validate();
    return model;
}

} // namespace

json parse_json_text(std::string_view text_in, std::string_view origin)
{
    try {
        return json::parse(text_in);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string(origin) + ": malformed JSON: " + e.what());
    }
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_atomic(const std::filesystem::path &path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), tmp.string() + ": cannot open for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        require(static_cast<bool>(out), tmp.string() + ": write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ValidationError(path.string() + ": rename failed");
    }
}

Parameters parameters_from_json(const json &doc)
{
    check_object(doc, "");
    check_keys(doc, {"version", "description", "reference_rates", "spectral_efficiency", "receiver", "budget"}, "");
    check_version(doc);

    Parameters params;
    const auto &refs = field(doc, "reference_rates", "");
    require(refs.is_array(), "reference_rates: expected an array");
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const std::string ctx = "reference_rates[" + std::to_string(i) + "]";
        const auto &r = refs[i];
        check_object(r, ctx);
        check_keys(r, {"mode", "duplexing", "link", "extremity", "r0_mbps", "b0_mhz"}, ctx);
        const auto mode = parse_enum(r, "mode", ctx, rates::parse_mode);
        const auto extremity = mode == rates::Mode::Mc625k && !r.contains("extremity")
                                   ? rates::Extremity::Low
                                   : parse_enum(r, "extremity", ctx, rates::parse_extremity);
        try {
            params.table.set_reference(mode, parse_enum(r, "duplexing", ctx, rates::parse_duplexing),
                                       parse_enum(r, "link", ctx, rates::parse_link), extremity,
                                       {number(r, "r0_mbps", ctx) * kBpsPerMbps, number(r, "b0_mhz", ctx) * kHzPerMHz});
        } catch (const ValidationError &e) {
            throw ValidationError(ctx + ": " + e.what());
        }
    }

    const auto &etas = field(doc, "spectral_efficiency", "");
    require(etas.is_array(), "spectral_efficiency: expected an array");
    for (std::size_t i = 0; i < etas.size(); ++i) {
        const std::string ctx = "spectral_efficiency[" + std::to_string(i) + "]";
        const auto &e = etas[i];
        check_object(e, ctx);
        check_keys(e, {"mobility", "link", "eta_bps_hz"}, ctx);
        try {
            params.table.set_eta(parse_enum(e, "mobility", ctx, rates::parse_mobility),
                                 parse_enum(e, "link", ctx, rates::parse_link), number(e, "eta_bps_hz", ctx));
        } catch (const ValidationError &err) {
            throw ValidationError(ctx + ": " + err.what());
        }
    }

    if (doc.contains("receiver")) {
        const auto &r = doc["receiver"];
        const std::string ctx = "receiver";
        check_object(r, ctx);
        check_keys(r, {"t_ref_k", "t_ant_k", "nf_db", "g_ant_db", "g_amp_db"}, ctx);
        auto &m = params.receiver;
        m.t_ref_k = number_or(r, "t_ref_k", m.t_ref_k, ctx);
        m.t_ant_k = number_or(r, "t_ant_k", m.t_ant_k, ctx);
        m.nf_db = number_or(r, "nf_db", m.nf_db, ctx);
        m.g_ant_db = number_or(r, "g_ant_db", m.g_ant_db, ctx);
        m.g_amp_db = number_or(r, "g_amp_db", m.g_amp_db, ctx);
        try {
            m.validate();
        } catch (const ValidationError &e) {
            throw ValidationError(ctx + "." + e.what());
        }
    }
    if (doc.contains("budget")) {
        const auto &b = doc["budget"];
        check_object(b, "budget");
        check_keys(b, {"d_max_db"}, "budget");
        params.budget.d_max_db = number(b, "d_max_db", "budget");
        params.budget.validate();
    }
    return params;
}

json parameters_to_json(const Parameters &params)
{
    json refs = json::array();
    for (const auto &[key, ref] : params.table.references()) {
        const auto [mode, duplexing, link, extremity] = key;
        json r = {{"mode", rates::to_string(mode)}, {"duplexing", rates::to_string(duplexing)},
                  {"link", rates::to_string(link)}};
        if (mode == rates::Mode::Ofdma)
            r["extremity"] = rates::to_string(extremity);
        r["r0_mbps"] = ref.r0_bps / kBpsPerMbps;
        r["b0_mhz"] = mhz(ref.b0_hz);
        refs.push_back(std::move(r));
    }
    json etas = json::array();
    for (const auto &[key, eta] : params.table.etas())
        etas.push_back({{"mobility", rates::to_string(key.first)}, {"link", rates::to_string(key.second)},
                        {"eta_bps_hz", eta}});
    const auto &m = params.receiver;
    return {{"version", kSchemaVersion},
            {"reference_rates", refs},
            {"spectral_efficiency", etas},
            {"receiver",
             {{"t_ref_k", m.t_ref_k},
              {"t_ant_k", m.t_ant_k},
              {"nf_db", m.nf_db},
              {"g_ant_db", m.g_ant_db},
              {"g_amp_db", m.g_amp_db}}},
            {"budget", {{"d_max_db", params.budget.d_max_db}}}};
}

Parameters load_parameters(const std::filesystem::path &path)
{
    try {
        return parameters_from_json(parse_json_text(read_file(path), path.string()));
    } catch (const ValidationError &e) {
        const std::string msg = e.what();
        if (msg.rfind(path.string(), 0) == 0)
            throw;
        throw ValidationError(path.string() + ": " + msg);
    }
}

const Parameters &bundled_parameters()
{
    static const Parameters params = parameters_from_json(parse_json_text(bundled_parameters_text(), "bundled"));
    return params;
}

const rates::RateTable &default_rate_table() { return bundled_parameters().table; }

field::InterferenceScenario scenario_from_json(const json &doc)
{
    check_object(doc, "");
    check_keys(doc, {"version", "description", "eirp_in_band", "victim", "rx_gain_db", "path_loss", "placement",
                     "offenders"},
               "");
    check_version(doc);
    if (doc.contains("eirp_in_band")) {
        const auto &flag = doc["eirp_in_band"];
        require(flag.is_boolean() && flag.get<bool>(),
                "eirp_in_band: only fully in-band offender EIRP (true) is supported");
    }

    field::InterferenceScenario s;
    if (doc.contains("victim")) {
        const auto &v = doc["victim"];
        check_object(v, "victim");
        check_keys(v, {"x_m", "y_m"}, "victim");
        s.victim = {number(v, "x_m", "victim"), number(v, "y_m", "victim")};
    }
    s.rx_gain_db = number_or(doc, "rx_gain_db", 0.0, "");
    s.path_loss = path_loss_from_json(field(doc, "path_loss", ""));
    if (doc.contains("placement"))
        s.placement = placement_from_json(doc["placement"]);

    if (doc.contains("offenders")) {
        const auto &list = doc["offenders"];
        require(list.is_array(), "offenders: expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto &o = list[i];
            std::string ctx = "offenders[" + std::to_string(i) + "]";
            check_object(o, ctx);
            field::Offender off;
            off.label = o.contains("label") && o["label"].is_string() ? o["label"].get<std::string>()
                                                                        : "#" + std::to_string(i);
            ctx += " (label '" + off.label + "')";
            check_keys(o, {"label", "x_m", "y_m", "eirp_dbm"}, ctx);
            off.position = {number(o, "x_m", ctx), number(o, "y_m", ctx)};
            off.eirp_dbm = number(o, "eirp_dbm", ctx);
            try {
                off.validate();
            } catch (const ValidationError &e) {
                throw ValidationError("offenders[" + std::to_string(i) + "]: " + e.what());
            }
            s.offenders.push_back(std::move(off));
        }
    }
    s.validate();
    return s;
}

json scenario_to_json(const field::InterferenceScenario &s)
{
    json path_loss = {{"kind", s.path_loss.kind == field::PathLossKind::FreeSpace ? "free_space" : "log_distance"},
                      {"frequency_hz", s.path_loss.frequency_hz}};
    if (s.path_loss.kind == field::PathLossKind::LogDistance) {
        path_loss["exponent"] = s.path_loss.exponent;
        path_loss["d0_m"] = s.path_loss.d0_m;
    }
    json offenders = json::array();
    for (const auto &o : s.offenders)
        offenders.push_back({{"label", o.label}, {"x_m", o.position.x_m}, {"y_m", o.position.y_m},
                             {"eirp_dbm", o.eirp_dbm}});
    return {{"version", kSchemaVersion},
            {"eirp_in_band", true},
            {"victim", {{"x_m", s.victim.x_m}, {"y_m", s.victim.y_m}}},
            {"rx_gain_db", s.rx_gain_db},
            {"path_loss", path_loss},
            {"placement", placement_to_json(s.placement)},
            {"offenders", offenders}};
}

field::InterferenceScenario load_scenario(const std::filesystem::path &path)
{
    try {
        return scenario_from_json(parse_json_text(read_file(path), path.string()));
    } catch (const ValidationError &e) {
        const std::string msg = e.what();
        if (msg.rfind(path.string(), 0) == 0)
            throw;
        throw ValidationError(path.string() + ": " + msg);
    }
}

CurveRecord to_curve_record(const benchmark::BenchmarkResult &r)
{
    return {r.point.bandwidth_hz / kHzPerMHz,
            r.rate_bps / kBpsPerMbps,
            r.eta_bps_hz,
            r.iagg_max_dbm,
            r.point.mode,
            r.point.duplexing,
            r.point.link,
            r.point.extremity,
            r.point.mobility};
}

std::string format_sig6(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string curve_csv(const std::vector<CurveRecord> &records)
{
    std::string out(kCurveCsvHeader);
    out += '\n';
    for (const auto &r : records) {
        out += format_sig6(r.bandwidth_mhz) + ',' + format_sig6(r.rate_mbps) + ',' + format_sig6(r.eta_bps_hz) + ',' +
               format_sig6(r.iagg_max_dbm) + ',';
        out += std::string(rates::to_string(r.mode)) + ',' + std::string(rates::to_string(r.duplexing)) + ',' +
               std::string(rates::to_string(r.link)) + ',' + std::string(rates::to_string(r.extremity)) + ',' +
               std::string(rates::to_string(r.mobility)) + '\n';
    }
    return out;
}

std::vector<CurveRecord> parse_curve_csv(std::string_view csv)
{
    std::istringstream in{std::string(csv)};
    std::string line;
    require(static_cast<bool>(std::getline(in, line)) && line == kCurveCsvHeader, "csv: unexpected header");
    std::vector<CurveRecord> out;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::istringstream cell_stream(line);
        std::string cell;
        while (std::getline(cell_stream, cell, ','))
            cells.push_back(cell);
        require(cells.size() == 9, "csv row " + std::to_string(row) + ": expected 9 columns");
        auto num = [&](std::size_t i) {
            try {
                std::size_t used = 0;
                const double v = std::stod(cells[i], &used);
                require(used == cells[i].size() && std::isfinite(v), "bad");
                return v;
            } catch (const std::exception &) {
                throw ValidationError("csv row " + std::to_string(row) + ": column " + std::to_string(i + 1) +
                                      " is not a finite number");
            }
        };
        out.push_back({num(0), num(1), num(2), num(3), rates::parse_mode(cells[4]), rates::parse_duplexing(cells[5]),
                       rates::parse_link(cells[6]), rates::parse_extremity(cells[7]),
                       rates::parse_mobility(cells[8])});
    }
    return out;
}

json curve_json(const std::vector<CurveRecord> &records)
{
    json rows = json::array();
    for (const auto &r : records)
        rows.push_back({{"bandwidth_mhz", r.bandwidth_mhz},
                        {"rate_mbps", r.rate_mbps},
                        {"eta_bps_hz", r.eta_bps_hz},
                        {"iagg_max_dbm", r.iagg_max_dbm},
                        {"mode", rates::to_string(r.mode)},
                        {"duplexing", rates::to_string(r.duplexing)},
                        {"link", rates::to_string(r.link)},
                        {"extremity", rates::to_string(r.extremity)},
                        {"mobility", rates::to_string(r.mobility)}});
    return rows;
}

json to_json(const rates::OperatingPoint &p)
{
    return {{"mode", rates::to_string(p.mode)},
            {"duplexing", rates::to_string(p.duplexing)},
            {"bandwidth_mhz", p.bandwidth_hz / kHzPerMHz},
            {"link", rates::to_string(p.link)},
            {"extremity", rates::to_string(p.extremity)},
            {"mobility", rates::to_string(p.mobility)}};
}

json to_json(const benchmark::BenchmarkResult &r)
{
    const auto &c = r.components;
    return {{"operating_point", to_json(r.point)},
            {"rate_mbps", r.rate_bps / kBpsPerMbps},
            {"eta_bps_hz", r.eta_bps_hz},
            {"iagg_max_dbm", r.iagg_max_dbm},
            {"iagg_max_w", r.iagg_max_w},
            {"components_db",
             {{"constant_db", c.constant_db},
              {"eta_db", c.eta_db},
              {"rate_db", c.rate_db},
              {"degradation_db", c.degradation_db},
              {"temperature_db", c.temperature_db}}}};
}

json to_json(const field::Verdict &v)
{
    return {{"iagg_dbm", v.iagg_dbm}, {"ceiling_dbm", v.ceiling_dbm}, {"margin_db", v.margin_db}, {"pass", v.pass}};
}

json to_json(const field::OutageReport &r)
{
    return {{"trials", r.trials},
            {"failures", r.failures},
            {"outage_probability", r.outage_probability},
            {"ceiling_dbm", r.ceiling_dbm},
            {"margin_db", {{"min", r.margin_min_db}, {"median", r.margin_median_db}, {"max", r.margin_max_db}}},
            {"seed", r.seed}};
}

} // namespace mbwa::io
