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

#include <span>
#include <vector>

#include "mbwa/radiometry.hpp"
#include "mbwa/rate_model.hpp"

namespace mbwa::benchmark {

struct DegradationBudget
{
    double d_max_db = 0.5;

    void validate() const;
};

// The additive constant of the closed-form ceiling: 10log10(k) + 30 (dBW to
// dBm) + 60 (MHz to Hz). PaperRounded substitutes the published -138.6.
enum class ConstantForm
{
    Exact,
    PaperRounded
};

double ceiling_constant_db(ConstantForm form);

// Additive dB terms of the ceiling, kept for auditability.
struct CeilingComponents
{
    double constant_db;
    double eta_db;          // -10log10(eta)
    double rate_db;         // +10log10(R_b in Mbps)
    double degradation_db;  // +10log10(10^(d_max/10) - 1)
    double temperature_db;  // +10log10(T_ant + T_amp)

    double sum() const { return constant_db + eta_db + rate_db + degradation_db + temperature_db; }
};

struct BenchmarkResult
{
    rates::OperatingPoint point;
    double rate_bps;
    double eta_bps_hz;
    double iagg_max_dbm;
    double iagg_max_w;
    CeilingComponents components;
};

// Maximum tolerable aggregate interference at the mobile receiver.
BenchmarkResult iagg_max(const rates::OperatingPoint &point, const rates::RateTable &table,
                         const radiometry::ReceiverNoiseModel &noise, const DegradationBudget &budget,
                         ConstantForm form = ConstantForm::Exact);

// Same ceiling built compositionally: B = R_b / eta fed through
// radiometry::iagg_from_degradation. Returns dBm.
double iagg_max_compositional_dbm(const rates::OperatingPoint &point, const rates::RateTable &table,
                                  const radiometry::ReceiverNoiseModel &noise, const DegradationBudget &budget);

struct SweepKey
{
    rates::Mode mode;
    rates::Duplexing duplexing;
    rates::Link link;
    rates::Extremity extremity;
    rates::Mobility mobility;
};

// One result per grid bandwidth (Hz), ordered by bandwidth. Points are
// evaluated in parallel; the output order depends only on the grid.
std::vector<BenchmarkResult> benchmark_sweep(const SweepKey &key, std::span<const double> grid_hz,
                                             const rates::RateTable &table,
                                             const radiometry::ReceiverNoiseModel &noise,
                                             const DegradationBudget &budget,
                                             ConstantForm form = ConstantForm::Exact);

// Pointwise (high - low) in dB. Both sweeps must share the same grid.
std::vector<double> diversity_margin(std::span<const BenchmarkResult> low, std::span<const BenchmarkResult> high);

} // namespace mbwa::benchmark
