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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "mbwa/benchmark.hpp"
#include "mbwa/error.hpp"
#include "mbwa/io.hpp"
#include "mbwa/rate_model.hpp"

using namespace mbwa;
using nlohmann::json;

namespace {

const std::filesystem::path kData = MBWA_DATA_DIR;

json minimal_scenario()
{
    return json::parse(R"({
      "version": 1,
      "path_loss": {"kind": "free_space", "frequency_hz": 2.0e9},
      "offenders": [{"label": "a", "x_m": 10.0, "y_m": 0.0, "eirp_dbm": 0.0}]
    })");
}

std::string error_of(const json &doc)
{
    try {
        io::scenario_from_json(doc);
    } catch (const ValidationError &e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parameter files")
{
    SUBCASE("bundled text matches the shipped file")
    {
        const auto shipped = io::load_parameters(kData / "params_default.json");
        const auto &bundled = io::bundled_parameters();
        CHECK(shipped.table.references() == bundled.table.references());
        CHECK(shipped.table.etas() == bundled.table.etas());
        CHECK(bundled.receiver.nf_db == 10.0);
        CHECK(bundled.receiver.t_ant_k == 288.0);
        CHECK(bundled.budget.d_max_db == 0.5);
    }
    SUBCASE("round trip through JSON")
    {
        const auto &p = io::bundled_parameters();
        const auto back = io::parameters_from_json(io::parameters_to_json(p));
        CHECK(back.table.references() == p.table.references());
        CHECK(back.table.etas() == p.table.etas());
        CHECK(back.receiver.t_ref_k == p.receiver.t_ref_k);
    }
    SUBCASE("edits change results")
    {
        auto doc = io::parameters_to_json(io::bundled_parameters());
        for (auto &e : doc["spectral_efficiency"])
            if (e["mobility"] == "pedestrian" && e["link"] == "dl")
                e["eta_bps_hz"] = 4.0;
        const auto p = io::parameters_from_json(doc);
        const rates::OperatingPoint pt{};
        const double base = benchmark::iagg_max(pt, io::default_rate_table(), p.receiver, p.budget).iagg_max_dbm;
        const double edited = benchmark::iagg_max(pt, p.table, p.receiver, p.budget).iagg_max_dbm;
        CHECK(base - edited == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-12));
    }
    SUBCASE("schema errors")
    {
        auto doc = io::parameters_to_json(io::bundled_parameters());
        doc["version"] = 2;
        CHECK_THROWS_WITH_AS(io::parameters_from_json(doc), doctest::Contains("version"), ValidationError);

        doc = io::parameters_to_json(io::bundled_parameters());
        doc["surprise"] = 1;
        CHECK_THROWS_WITH_AS(io::parameters_from_json(doc), doctest::Contains("surprise"), ValidationError);

        doc = io::parameters_to_json(io::bundled_parameters());
        doc["budget"]["d_max_db"] = "half";
        CHECK_THROWS_WITH_AS(io::parameters_from_json(doc), doctest::Contains("d_max_db"), ValidationError);

        CHECK_THROWS_AS(io::load_parameters(kData / "does-not-exist.json"), ValidationError);
        CHECK_THROWS_WITH_AS(io::parse_json_text("{\"version\": ", "inline"), doctest::Contains("inline"),
                             ValidationError);
    }
}

TEST_CASE("scenario files")
{
    SUBCASE("shipped scenarios load")
    {
        for (const char *name : {"uwb_field.json", "negligible.json", "overwhelming.json"}) {
            CAPTURE(name);
            CHECK_NOTHROW(io::load_scenario(kData / "scenarios" / name));
        }
        const auto s = io::load_scenario(kData / "scenarios" / "uwb_field.json");
        CHECK(s.is_random());
        CHECK(s.path_loss.kind == field::PathLossKind::LogDistance);
    }
    SUBCASE("bundled scenario is the shipped one")
    {
        const auto a = io::scenario_from_json(io::parse_json_text(io::bundled_scenario_text(), "bundled"));
        const auto b = io::load_scenario(kData / "scenarios" / "uwb_field.json");
        CHECK(io::scenario_to_json(a) == io::scenario_to_json(b));
    }
    SUBCASE("round trip")
    {
        for (const char *name : {"uwb_field.json", "negligible.json", "overwhelming.json"}) {
            CAPTURE(name);
            const auto s = io::load_scenario(kData / "scenarios" / name);
            const auto j = io::scenario_to_json(s);
            CHECK(io::scenario_to_json(io::scenario_from_json(j)) == j);
        }
    }
    SUBCASE("errors name the field and the offender")
    {
        CHECK(error_of(minimal_scenario()).empty());

        auto doc = minimal_scenario();
        doc["offenders"].push_back({{"label", "rogue"}, {"x_m", 1.0}, {"y_m", 0.0}, {"eirp_dbm", "loud"}});
        const auto msg = error_of(doc);
        CHECK(msg.find("offenders[1]") != std::string::npos);
        CHECK(msg.find("rogue") != std::string::npos);
        CHECK(msg.find("eirp_dbm") != std::string::npos);

        doc = minimal_scenario();
        doc["offenders"][0]["eirp_dbm"] = 120.0;
        CHECK(error_of(doc).find("offenders[0]") != std::string::npos);

        doc = minimal_scenario();
        doc["offenders"][0]["z_m"] = 1.0;
        CHECK(error_of(doc).find("z_m") != std::string::npos);

        doc = minimal_scenario();
        doc["path_loss"]["kind"] = "two_ray";
        CHECK(error_of(doc).find("path_loss.kind") != std::string::npos);

        doc = minimal_scenario();
        doc.erase("path_loss");
        CHECK(error_of(doc).find("path_loss") != std::string::npos);
    }
    SUBCASE("only in-band EIRP is accepted")
    {
        auto doc = minimal_scenario();
        doc["eirp_in_band"] = false;
        CHECK(error_of(doc).find("eirp_in_band") != std::string::npos);
        doc["eirp_in_band"] = true;
        CHECK(error_of(doc).empty());
    }
    SUBCASE("load errors carry the path")
    {
        const auto path = std::filesystem::temp_directory_path() / "mbwa_bad_scenario.json";
        io::write_atomic(path, "{\"version\": 1}");
        const std::string where = path.string();
        CHECK_THROWS_WITH_AS(io::load_scenario(path), doctest::Contains(where.c_str()), ValidationError);
        std::filesystem::remove(path);
    }
}

TEST_CASE("curve CSV")
{
    const auto &p = io::bundled_parameters();
    std::vector<io::CurveRecord> records;
    for (auto link : {rates::Link::Downlink, rates::Link::Uplink}) {
        const benchmark::SweepKey key{rates::Mode::Ofdma, rates::Duplexing::Tdd, link, rates::Extremity::High,
                                      rates::Mobility::Highspeed};
        const auto grid = rates::default_grid(key.mode, key.duplexing);
        for (const auto &r : benchmark::benchmark_sweep(key, grid, p.table, p.receiver, p.budget))
            records.push_back(io::to_curve_record(r));
    }

    SUBCASE("header")
    {
        const auto csv = io::curve_csv(records);
        CHECK(csv.substr(0, csv.find('\n')) == io::kCurveCsvHeader);
    }
    SUBCASE("round trip within six significant digits")
    {
        const auto back = io::parse_curve_csv(io::curve_csv(records));
        REQUIRE(back.size() == records.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].bandwidth_mhz == doctest::Approx(records[i].bandwidth_mhz).epsilon(5e-6));
            CHECK(back[i].rate_mbps == doctest::Approx(records[i].rate_mbps).epsilon(5e-6));
            CHECK(back[i].iagg_max_dbm == doctest::Approx(records[i].iagg_max_dbm).epsilon(5e-6));
            CHECK(back[i].link == records[i].link);
            CHECK(back[i].mobility == records[i].mobility);
        }
        CHECK(io::curve_csv(back) == io::curve_csv(records));
    }
    SUBCASE("random values survive formatting")
    {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> exponent(-12.0, 12.0);
        for (int i = 0; i < 10000; ++i) {
            const double v = std::pow(10.0, exponent(rng)) * (i % 2 ? -1.0 : 1.0);
            const double back = std::stod(io::format_sig6(v));
            CHECK(std::abs(back - v) <= 5e-6 * std::abs(v));
        }
    }
    SUBCASE("malformed input")
    {
        CHECK_THROWS_AS(io::parse_curve_csv("a,b\n"), ValidationError);
        const std::string header(io::kCurveCsvHeader);
        CHECK_THROWS_WITH_AS(io::parse_curve_csv(header + "\n1,2,3\n"), doctest::Contains("row 1"), ValidationError);
        CHECK_THROWS_AS(io::parse_curve_csv(header + "\n1,2,x,4,ofdma,fdd,dl,low,pedestrian\n"), ValidationError);
        CHECK_THROWS_AS(io::parse_curve_csv(header + "\n1,2,3,4,ofdma,fdd,sideways,low,pedestrian\n"),
                        ValidationError);
    }
}

TEST_CASE("write_atomic")
{
    const auto dir = std::filesystem::temp_directory_path() / "mbwa_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.txt";
    io::write_atomic(path, "first");
    io::write_atomic(path, "second\n");
    CHECK(io::read_file(path) == "second\n");
    for (const auto &entry : std::filesystem::directory_iterator(dir))
        CHECK(entry.path().filename() == "out.txt");
    CHECK_THROWS_AS(io::write_atomic(dir / "missing" / "x.txt", "x"), ValidationError);
    std::filesystem::remove_all(dir);
}
