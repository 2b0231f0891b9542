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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mbwa/benchmark.hpp"
#include "mbwa/io.hpp"
#include "mbwa/rate_model.hpp"

namespace mbwa::cli {

// Exit-code contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

enum class Command
{
    Budget,
    Sweep,
    Rates,
    Simulate,
    Outage,
    Reproduce
};

enum class Format
{
    Default,  // text for budget/reproduce, csv for sweep/rates, json for simulate/outage
    Csv,
    Json
};

struct RunConfig
{
    Command command = Command::Budget;
    io::Parameters params = io::bundled_parameters();
    benchmark::ConstantForm constant = benchmark::ConstantForm::Exact;

    rates::OperatingPoint point;
    // sweep/rates expand over every listed value; empty means point's value.
    std::vector<rates::Link> links;
    std::vector<rates::Extremity> extremities;
    std::vector<rates::Mobility> mobilities;
    std::optional<std::vector<double>> grid_hz;

    std::optional<std::filesystem::path> scenario_path;
    std::optional<std::string> scenario_text;  // takes precedence over scenario_path
    int trials = 1000;
    std::optional<std::uint64_t> seed;
    double max_outage = 0.0;

    Format format = Format::Default;
    std::optional<std::filesystem::path> out;
};

// Runs one command. Validation problems are reported on `err` and mapped to
// kExitError; nothing is thrown.
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

// Parses command-line arguments (argv[0] is the program name) and executes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// "2.5,5,10" or "start:step:stop", in MHz. Returns hertz.
std::vector<double> parse_grid_mhz(const std::string &spec);

} // namespace mbwa::cli
