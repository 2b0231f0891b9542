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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mbwa/benchmark.hpp"
#include "mbwa/interference_field.hpp"
#include "mbwa/radiometry.hpp"
#include "mbwa/rate_model.hpp"

namespace mbwa::io {

inline constexpr int kSchemaVersion = 1;

// Parameter file: reference rates, spectral efficiencies and, optionally, the
// receiver noise model and degradation budget.
struct Parameters
{
    rates::RateTable table;
    radiometry::ReceiverNoiseModel receiver;
    benchmark::DegradationBudget budget;
};

Parameters parameters_from_json(const nlohmann::json &doc);
nlohmann::json parameters_to_json(const Parameters &params);
Parameters load_parameters(const std::filesystem::path &path);

// The parameter file compiled into the library.
std::string_view bundled_parameters_text();
const Parameters &bundled_parameters();
const rates::RateTable &default_rate_table();

// A random-field scenario compiled into the library; used by `reproduce`.
std::string_view bundled_scenario_text();

field::InterferenceScenario scenario_from_json(const nlohmann::json &doc);
nlohmann::json scenario_to_json(const field::InterferenceScenario &scenario);
field::InterferenceScenario load_scenario(const std::filesystem::path &path);

nlohmann::json parse_json_text(std::string_view text, std::string_view origin);

// One row of a benchmark sweep.
struct CurveRecord
{
    double bandwidth_mhz;
    double rate_mbps;
    double eta_bps_hz;
    double iagg_max_dbm;
    rates::Mode mode;
    rates::Duplexing duplexing;
    rates::Link link;
    rates::Extremity extremity;
    rates::Mobility mobility;
};

CurveRecord to_curve_record(const benchmark::BenchmarkResult &result);

inline constexpr std::string_view kCurveCsvHeader =
    "bandwidth_mhz,rate_mbps,eta_bps_hz,iagg_max_dbm,mode,duplexing,link,extremity,mobility";
inline constexpr std::string_view kRateCsvHeader = "bandwidth_mhz,rate_mbps,mode,duplexing,link,extremity";

// Six significant digits, "%.6g".
std::string format_sig6(double value);

std::string curve_csv(const std::vector<CurveRecord> &records);
std::vector<CurveRecord> parse_curve_csv(std::string_view text);
nlohmann::json curve_json(const std::vector<CurveRecord> &records);

nlohmann::json to_json(const rates::OperatingPoint &point);
nlohmann::json to_json(const benchmark::BenchmarkResult &result);
nlohmann::json to_json(const field::Verdict &verdict);
nlohmann::json to_json(const field::OutageReport &report);

// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path &path, std::string_view content);

std::string read_file(const std::filesystem::path &path);

} // namespace mbwa::io
