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

#include "mbwa/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <string>
#include <thread>

#include "mbwa/error.hpp"
#include "mbwa/units.hpp"

namespace mbwa::benchmark {

void DegradationBudget::validate() const
{
    require(std::isfinite(d_max_db) && d_max_db > 0.0, "degradation budget must be positive");
}

double ceiling_constant_db(ConstantForm form)
{
    if (form == ConstantForm::PaperRounded)
        return -138.6;
    return to_db(kBoltzmann) + 30.0 + 60.0;
}

BenchmarkResult iagg_max(const rates::OperatingPoint &point, const rates::RateTable &table,
                         const radiometry::ReceiverNoiseModel &noise, const DegradationBudget &budget,
                         ConstantForm form)
{
    budget.validate();
    const double rate_bps = rates::peak_rate(table, point);
    const double eta = rates::spectral_efficiency(table, point.mobility, point.link);
    const double t_sys = noise.t_ant_k + radiometry::amp_temperature(noise);

    CeilingComponents c{};
    c.constant_db = ceiling_constant_db(form);
    c.eta_db = -to_db(eta);
    c.rate_db = to_db(rate_bps / kBpsPerMbps);
    c.degradation_db = to_db(from_db_minus_one(budget.d_max_db));
    c.temperature_db = to_db(t_sys);

    const double dbm = c.sum();
    return {point, rate_bps, eta, dbm, dbm_to_watts(dbm), c};
}

double iagg_max_compositional_dbm(const rates::OperatingPoint &point, const rates::RateTable &table,
                                  const radiometry::ReceiverNoiseModel &noise, const DegradationBudget &budget)
{
    budget.validate();
    const double rate_bps = rates::peak_rate(table, point);
    const double eta = rates::spectral_efficiency(table, point.mobility, point.link);
    const double effective_band_hz = rate_bps / eta;
    return radiometry::iagg_from_degradation(budget.d_max_db, noise, effective_band_hz).dbm();
}

std::vector<BenchmarkResult> benchmark_sweep(const SweepKey &key, std::span<const double> grid_hz,
                                             const rates::RateTable &table,
                                             const radiometry::ReceiverNoiseModel &noise,
                                             const DegradationBudget &budget, ConstantForm form)
{
    budget.validate();
    std::vector<double> grid(grid_hz.begin(), grid_hz.end());
    std::stable_sort(grid.begin(), grid.end());

    auto evaluate = [&](std::size_t i) {
        const rates::OperatingPoint point{key.mode, key.duplexing, grid[i], key.link, key.extremity, key.mobility};
        try {
            return iagg_max(point, table, noise, budget, form);
        } catch (const ValidationError &e) {
            throw ValidationError("grid[" + std::to_string(i) + "]: " + e.what());
        }
    };

    // Small grids are not worth a thread hop.
    const std::size_t workers =
        grid.size() < 256 ? 1 : std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
    std::vector<BenchmarkResult> out(grid.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = evaluate(i);
        return out;
    }

    std::vector<std::future<void>> tasks;
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
        const std::size_t end = std::min(grid.size(), begin + chunk);
        tasks.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                out[i] = evaluate(i);
        }));
    }
    // Join every task before rethrowing so no worker outlives `out`.
    std::exception_ptr first_error;
    for (auto &t : tasks) {
        try {
            t.get();
        } catch (...) {
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

std::vector<double> diversity_margin(std::span<const BenchmarkResult> low, std::span<const BenchmarkResult> high)
{
    require(low.size() == high.size(), "diversity_margin: sweeps have different grid sizes");
    std::vector<double> out;
    out.reserve(low.size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        const double a = low[i].point.bandwidth_hz;
        const double b = high[i].point.bandwidth_hz;
        require(std::abs(a - b) <= 1e-9 * std::max(a, b),
                "diversity_margin: grid mismatch at index " + std::to_string(i));
        out.push_back(high[i].iagg_max_dbm - low[i].iagg_max_dbm);
    }
    return out;
}

} // namespace mbwa::benchmark
