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
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mbwa/cli.hpp"
#include "mbwa/io.hpp"

using namespace mbwa;

namespace {

const std::filesystem::path kData = MBWA_DATA_DIR;

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const char *name) { return (kData / "scenarios" / name).string(); }

double field_value(const std::string &text, const std::string &key)
{
    const auto at = text.find(key);
    REQUIRE(at != std::string::npos);
    return std::stod(text.substr(text.find(':', at) + 1));
}

} // namespace

TEST_CASE("budget")
{
    SUBCASE("worked example")
    {
        const auto r = invoke({"budget", "--mode", "ofdma", "--duplexing", "fdd", "--link", "dl", "--extremity", "low",
                            "--mobility", "pedestrian", "--bandwidth-mhz", "2.5"});
        CHECK(r.code == cli::kExitPass);
        CHECK(field_value(r.out, "iagg_max_dbm") == doctest::Approx(-113.11).epsilon(5e-5));
        const auto exact = invoke({"budget", "--paper-exact"});
        CHECK(std::abs(field_value(exact.out, "iagg_max_dbm") - field_value(r.out, "iagg_max_dbm")) <= 1e-3);
    }
    SUBCASE("json output")
    {
        const auto r = invoke({"budget", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["iagg_max_dbm"].get<double>() == doctest::Approx(-113.113925).epsilon(1e-8));
    }
    SUBCASE("overrides")
    {
        const double base = field_value(invoke({"budget"}).out, "iagg_max_dbm");
        const double quieter = field_value(invoke({"budget", "--nf-db", "5"}).out, "iagg_max_dbm");
        CHECK(quieter < base);
        const double eta = field_value(invoke({"budget", "--eta", "pedestrian:dl=4"}).out, "iagg_max_dbm");
        CHECK(base - eta == doctest::Approx(10.0 * std::log10(2.0)));
    }
    SUBCASE("invalid inputs exit 2 with a clear message")
    {
        auto r = invoke({"budget", "--dmax-db", "0"});
        CHECK(r.code == cli::kExitError);
        CHECK(r.err.find("degradation budget must be positive") != std::string::npos);
        CHECK(r.out.empty());

        CHECK(invoke({"budget", "--bandwidth-mhz", "1"}).code == cli::kExitError);
        CHECK(invoke({"budget", "--mode", "mc625k", "--duplexing", "fdd"}).code == cli::kExitError);
        CHECK(invoke({"budget", "--mode", "mc625k", "--bandwidth-mhz", "1.0"}).code == cli::kExitError);
        CHECK(invoke({"budget", "--link", "sideways"}).code == cli::kExitError);
        CHECK(invoke({"budget", "--bogus"}).code == cli::kExitError);
        CHECK(invoke({}).code == cli::kExitError);
    }
}

TEST_CASE("sweep and rates")
{
    SUBCASE("csv layout and ordering")
    {
        const auto r = invoke({"sweep", "--duplexing", "tdd", "--link", "all", "--extremity", "high", "--grid", "40,5,10"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        CHECK(line == io::kCurveCsvHeader);
        const auto rows = io::parse_curve_csv(r.out);
        REQUIRE(rows.size() == 6);
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i - 1].bandwidth_mhz <= rows[i].bandwidth_mhz);
        // High extremity, pedestrian: DL and UL carry the same ceiling.
        for (std::size_t i = 0; i < rows.size(); i += 2)
            CHECK(rows[i].iagg_max_dbm == doctest::Approx(rows[i + 1].iagg_max_dbm).epsilon(1e-6));
    }
    SUBCASE("MC625K downlink-uplink gap")
    {
        const auto r = invoke({"rates", "--mode", "mc625k", "--link", "all", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        std::map<double, std::map<std::string, double>> by_bw;
        for (const auto &row : j)
            by_bw[row["bandwidth_mhz"].get<double>()][row["link"].get<std::string>()] =
                row["rate_mbps"].get<double>();
        REQUIRE(by_bw.size() == 64);
        for (const auto &[bw, rate] : by_bw)
            CHECK(10.0 * std::log10(rate.at("dl") / rate.at("ul")) == doctest::Approx(4.1727).epsilon(2e-5));
    }
    SUBCASE("rates header")
    {
        const auto r = invoke({"rates", "--grid", "2.5:2.5:10"});
        REQUIRE(r.code == 0);
        CHECK(r.out.substr(0, r.out.find('\n')) == io::kRateCsvHeader);
    }
    SUBCASE("empty or entirely invalid grids exit 2")
    {
        CHECK(invoke({"sweep", "--grid", ""}).code == cli::kExitError);
        CHECK(invoke({"sweep", "--grid", "100,200"}).code == cli::kExitError);
        const auto partial = invoke({"sweep", "--grid", "5,100"});
        CHECK(partial.code == 0);
        CHECK(partial.err.find("1") != std::string::npos);
    }
}

TEST_CASE("simulate and outage")
{
    SUBCASE("verdicts map onto exit codes")
    {
        const auto quiet = invoke({"simulate", "--scenario", scenario("negligible.json")});
        CHECK(quiet.code == cli::kExitPass);
        CHECK(nlohmann::json::parse(quiet.out)["pass"] == true);
        const auto loud = invoke({"simulate", "--scenario", scenario("overwhelming.json")});
        CHECK(loud.code == cli::kExitFail);
        const auto j = nlohmann::json::parse(loud.out);
        CHECK(j["pass"] == false);
        CHECK(j["offender_count"] == 8);
    }
    SUBCASE("missing or broken scenarios exit 2")
    {
        CHECK(invoke({"simulate"}).code == cli::kExitError);
        const auto r = invoke({"simulate", "--scenario", scenario("nope.json")});
        CHECK(r.code == cli::kExitError);
        CHECK(r.err.find("nope.json") != std::string::npos);
    }
    SUBCASE("same seed, same bytes")
    {
        const std::vector<std::string> args{"outage", "--scenario", scenario("uwb_field.json"), "--trials", "500",
                                            "--seed", "11", "--max-outage", "1"};
        const auto a = invoke(args);
        const auto b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        auto other = args;
        other[6] = "12";
        CHECK(invoke(other).out != a.out);
    }
    SUBCASE("outage threshold")
    {
        const auto r = invoke({"outage", "--scenario", scenario("uwb_field.json"), "--trials", "500"});
        const double p = nlohmann::json::parse(r.out)["outage_probability"].get<double>();
        CHECK(r.code == (p > 0.0 ? cli::kExitFail : cli::kExitPass));
        CHECK(invoke({"outage", "--scenario", scenario("negligible.json")}).code == cli::kExitError);
        CHECK(invoke({"outage", "--scenario", scenario("uwb_field.json"), "--trials", "0"}).code == cli::kExitError);
    }
    SUBCASE("--out writes the file and nothing to stdout")
    {
        const auto path = std::filesystem::temp_directory_path() / "mbwa_cli_out.json";
        std::filesystem::remove(path);
        const auto r = invoke({"simulate", "--scenario", scenario("negligible.json"), "--out", path.string()});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(nlohmann::json::parse(io::read_file(path))["pass"] == true);
        std::filesystem::remove(path);
    }
}

TEST_CASE("reproduce")
{
    SUBCASE("report lists every check")
    {
        const auto r = invoke({"reproduce"});
        CHECK(r.out.find("checks passed") != std::string::npos);
        CHECK(r.out.find("expected=0.087") != std::string::npos);
        for (const char *id : {"1a", "2", "3a", "3b", "4", "5", "6", "7a", "8a", "9a", "10"})
            CHECK(r.out.find(std::string("] ") + id + " ") != std::string::npos);
    }
    SUBCASE("a perturbed table is caught")
    {
        const auto r = invoke({"reproduce", "--eta", "highspeed:dl=2.0"});
        CHECK(r.code == cli::kExitFail);
        CHECK(r.out.find("[FAIL] 7a") != std::string::npos);
    }
}

TEST_CASE("grid parsing")
{
    CHECK(cli::parse_grid_mhz("2.5,5") == std::vector<double>{2.5e6, 5e6});
    CHECK(cli::parse_grid_mhz("5:5:20").size() == 4);
    CHECK_THROWS(cli::parse_grid_mhz("5:0:20"));
    CHECK_THROWS(cli::parse_grid_mhz("five"));
}
