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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mbwa/benchmark.hpp"
#include "mbwa/radiometry.hpp"
#include "mbwa/rate_model.hpp"

namespace mbwa::field {

struct Position
{
    double x_m = 0.0;
    double y_m = 0.0;

    bool operator==(const Position &) const = default;
};

double distance_m(const Position &a, const Position &b);

inline constexpr double kMinEirpDbm = -100.0;
inline constexpr double kMaxEirpDbm = 80.0;

struct Offender
{
    Position position;
    double eirp_dbm = 0.0;  // treated as fully in-band
    std::string label;

    void validate() const;

    bool operator==(const Offender &) const = default;
};

enum class PathLossKind
{
    FreeSpace,
    LogDistance
};

struct PathLossModel
{
    PathLossKind kind = PathLossKind::FreeSpace;
    double frequency_hz = 2.0e9;
    double exponent = 2.0;  // log-distance only
    double d0_m = 1.0;      // log-distance only

    void validate() const;
};

// Free space: 20log10(4 pi d f / c). Log distance: free-space loss at d0 plus
// 10 n log10(d / d0), defined for d >= d0.
double path_loss_db(const PathLossModel &model, double distance_m);

struct ExplicitPlacement
{
};

// rows x cols lattice centred on the victim; the cell that coincides with the
// victim (odd rows and odd cols) is dropped.
struct GridPlacement
{
    int rows = 1;
    int cols = 1;
    double spacing_m = 1.0;
    double eirp_dbm = 0.0;
};

// count offenders drawn uniformly by area over the annulus [r_min, r_max].
struct UniformDiscPlacement
{
    int count = 1;
    double r_min_m = 1.0;
    double r_max_m = 10.0;
    std::uint64_t seed = 0;
    double eirp_dbm = 0.0;
};

using Placement = std::variant<ExplicitPlacement, GridPlacement, UniformDiscPlacement>;

struct InterferenceScenario
{
    Position victim;
    std::vector<Offender> offenders;  // always included, whatever the placement
    Placement placement = ExplicitPlacement{};
    PathLossModel path_loss;
    double rx_gain_db = 0.0;

    void validate() const;
    bool is_random() const { return std::holds_alternative<UniformDiscPlacement>(placement); }
};

// Listed offenders followed by the generated ones.
std::vector<Offender> realize_placement(const InterferenceScenario &scenario);

// Power received from one offender, in watts.
double received_power_w(const Offender &offender, const Position &victim, const PathLossModel &path_loss,
                        double rx_gain_db);

// Linear-domain sum over already realized offenders.
radiometry::PowerQuantity aggregate_interference(std::span<const Offender> offenders, const Position &victim,
                                                 const PathLossModel &path_loss, double rx_gain_db);

radiometry::PowerQuantity aggregate_interference(const InterferenceScenario &scenario);

struct Verdict
{
    double iagg_dbm;
    double ceiling_dbm;
    double margin_db;  // ceiling - iagg
    bool pass;         // margin_db >= 0; equality passes
};

Verdict make_verdict(double iagg_dbm, double ceiling_dbm);

Verdict coexistence_verdict(const InterferenceScenario &scenario, const rates::OperatingPoint &point,
                            const rates::RateTable &table, const radiometry::ReceiverNoiseModel &noise,
                            const benchmark::DegradationBudget &budget,
                            benchmark::ConstantForm form = benchmark::ConstantForm::Exact);

struct OutageReport
{
    int trials = 0;
    int failures = 0;
    double outage_probability = 0.0;
    double ceiling_dbm = 0.0;
    double margin_min_db = 0.0;
    double margin_median_db = 0.0;
    double margin_max_db = 0.0;
    std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// seed_t = splitmix64(splitmix64(seed) ^ t)
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Repeats the verdict with per-trial seeds. Requires a uniform_disc template.
OutageReport monte_carlo_outage(const InterferenceScenario &scenario_template, int trials,
                                const rates::OperatingPoint &point, const rates::RateTable &table,
                                const radiometry::ReceiverNoiseModel &noise,
                                const benchmark::DegradationBudget &budget,
                                benchmark::ConstantForm form = benchmark::ConstantForm::Exact);

} // namespace mbwa::field
