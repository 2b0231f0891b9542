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

#include "mbwa/interference_field.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <numeric>
#include <thread>

#include "mbwa/error.hpp"
#include "mbwa/units.hpp"

namespace mbwa::field {

namespace {

std::string offender_context(const Offender &o)
{
    return "offender '" + o.label + "'";
}

double free_space_db(double frequency_hz, double distance)
{
    return 20.0 * std::log10(4.0 * kPi * distance * frequency_hz / kSpeedOfLight);
}

// SplitMix64 stream: one add and a mix per draw, and seeding is free, so every
// Monte-Carlo trial can own a generator.
class PlacementRng
{
  public:
    explicit PlacementRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        const std::uint64_t out = splitmix64(state_);
        state_ += 0x9E3779B97F4A7C15ULL;
        return out;
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double unit_uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

void require_eirp(double eirp_dbm, const std::string &context)
{
    require(std::isfinite(eirp_dbm) && eirp_dbm >= kMinEirpDbm && eirp_dbm <= kMaxEirpDbm,
            context + ": eirp_dbm must be within [-100, 80] dBm");
}

std::vector<Offender> grid_offenders(const GridPlacement &g, const Position &victim)
{
    std::vector<Offender> out;
    const double row_centre = (g.rows - 1) / 2.0;
    const double col_centre = (g.cols - 1) / 2.0;
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            if (r == row_centre && c == col_centre)
                continue;
            Offender o;
            o.position = {victim.x_m + (c - col_centre) * g.spacing_m, victim.y_m + (r - row_centre) * g.spacing_m};
            o.eirp_dbm = g.eirp_dbm;
            o.label = "grid[" + std::to_string(r) + "," + std::to_string(c) + "]";
            out.push_back(std::move(o));
        }
    }
    return out;
}

template <class Visit>
void for_each_disc_position(const UniformDiscPlacement &d, const Position &victim, Visit &&visit)
{
    PlacementRng rng(d.seed);
    const double r_min_sq = d.r_min_m * d.r_min_m;
    const double span_sq = d.r_max_m * d.r_max_m - r_min_sq;
    for (int i = 0; i < d.count; ++i) {
        const double radius = std::sqrt(r_min_sq + rng.unit_uniform() * span_sq);
        const double angle = 2.0 * kPi * rng.unit_uniform();
        visit(i, Position{victim.x_m + radius * std::cos(angle), victim.y_m + radius * std::sin(angle)});
    }
}

std::vector<Offender> disc_offenders(const UniformDiscPlacement &d, const Position &victim)
{
    std::vector<Offender> out;
    out.reserve(static_cast<std::size_t>(d.count));
    for_each_disc_position(d, victim, [&](int i, const Position &p) {
        out.push_back({p, d.eirp_dbm, "disc[" + std::to_string(i) + "]"});
    });
    return out;
}

struct PlacementValidator
{
    void operator()(const ExplicitPlacement &) const {}
    void operator()(const GridPlacement &g) const
    {
        require(g.rows >= 1 && g.cols >= 1, "placement.grid: rows and cols must be >= 1");
        require(std::isfinite(g.spacing_m) && g.spacing_m > 0.0, "placement.grid: spacing_m must be positive");
        require_eirp(g.eirp_dbm, "placement.grid");
    }
    void operator()(const UniformDiscPlacement &d) const
    {
        require(d.count >= 1, "placement.uniform_disc: count must be >= 1");
        require(std::isfinite(d.r_min_m) && d.r_min_m > 0.0, "placement.uniform_disc: r_min_m must be positive");
        require(std::isfinite(d.r_max_m) && d.r_max_m >= d.r_min_m,
                "placement.uniform_disc: r_max_m must be >= r_min_m");
        require_eirp(d.eirp_dbm, "placement.uniform_disc");
    }
};

} // namespace

double distance_m(const Position &a, const Position &b) { return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m); }

void Offender::validate() const
{
    require(std::isfinite(position.x_m) && std::isfinite(position.y_m),
            offender_context(*this) + ": position must be finite");
    require_eirp(eirp_dbm, offender_context(*this));
}

void PathLossModel::validate() const
{
    require(std::isfinite(frequency_hz) && frequency_hz > 0.0, "path_loss.frequency_hz: must be positive");
    if (kind == PathLossKind::LogDistance) {
        require(std::isfinite(exponent) && exponent >= 1.0, "path_loss.exponent: must be >= 1");
        require(std::isfinite(d0_m) && d0_m > 0.0, "path_loss.d0_m: must be positive");
    }
}

double path_loss_db(const PathLossModel &model, double distance)
{
    model.validate();
    require(std::isfinite(distance) && distance > 0.0, "path loss: distance must be positive");
    if (model.kind == PathLossKind::FreeSpace)
        return free_space_db(model.frequency_hz, distance);
    require(distance >= model.d0_m, "path loss: distance below log-distance reference d0");
    return free_space_db(model.frequency_hz, model.d0_m) + 10.0 * model.exponent * std::log10(distance / model.d0_m);
}

void InterferenceScenario::validate() const
{
    require(std::isfinite(victim.x_m) && std::isfinite(victim.y_m), "victim: position must be finite");
    require(std::isfinite(rx_gain_db), "rx_gain_db: must be finite");
    path_loss.validate();
    for (const auto &o : offenders)
        o.validate();
    std::visit(PlacementValidator{}, placement);
}

std::vector<Offender> realize_placement(const InterferenceScenario &scenario)
{
    scenario.validate();
    std::vector<Offender> out = scenario.offenders;
    std::vector<Offender> generated;
    if (const auto *g = std::get_if<GridPlacement>(&scenario.placement))
        generated = grid_offenders(*g, scenario.victim);
    else if (const auto *d = std::get_if<UniformDiscPlacement>(&scenario.placement))
        generated = disc_offenders(*d, scenario.victim);
    out.insert(out.end(), std::make_move_iterator(generated.begin()), std::make_move_iterator(generated.end()));
    require(!out.empty(), "placement: scenario realizes zero offenders");
    return out;
}

double received_power_w(const Offender &offender, const Position &victim, const PathLossModel &path_loss,
                        double rx_gain_db)
{
    double loss = 0.0;
    try {
        loss = path_loss_db(path_loss, distance_m(offender.position, victim));
    } catch (const ValidationError &e) {
        throw ValidationError(offender_context(offender) + ": " + e.what());
    }
    return dbm_to_watts(offender.eirp_dbm - loss + rx_gain_db);
}

radiometry::PowerQuantity aggregate_interference(std::span<const Offender> offenders, const Position &victim,
                                                 const PathLossModel &path_loss, double rx_gain_db)
{
    require(!offenders.empty(), "aggregate_interference: no offenders");
    double total = 0.0;
    for (const auto &o : offenders)
        total += received_power_w(o, victim, path_loss, rx_gain_db);
    return radiometry::PowerQuantity(total, radiometry::PowerRole::Interference);
}

radiometry::PowerQuantity aggregate_interference(const InterferenceScenario &scenario)
{
    const auto offenders = realize_placement(scenario);
    return aggregate_interference(offenders, scenario.victim, scenario.path_loss, scenario.rx_gain_db);
}

Verdict make_verdict(double iagg_dbm, double ceiling_dbm)
{
    const double margin = ceiling_dbm - iagg_dbm;
    return {iagg_dbm, ceiling_dbm, margin, margin >= 0.0};
}

Verdict coexistence_verdict(const InterferenceScenario &scenario, const rates::OperatingPoint &point,
                            const rates::RateTable &table, const radiometry::ReceiverNoiseModel &noise,
                            const benchmark::DegradationBudget &budget, benchmark::ConstantForm form)
{
    const double ceiling = benchmark::iagg_max(point, table, noise, budget, form).iagg_max_dbm;
    return make_verdict(aggregate_interference(scenario).dbm(), ceiling);
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

OutageReport monte_carlo_outage(const InterferenceScenario &scenario_template, int trials,
                                const rates::OperatingPoint &point, const rates::RateTable &table,
                                const radiometry::ReceiverNoiseModel &noise,
                                const benchmark::DegradationBudget &budget, benchmark::ConstantForm form)
{
    require(scenario_template.is_random(), "outage: placement must be uniform_disc (random)");
    require(trials >= 1, "trials: must be >= 1");
    scenario_template.validate();

    const double ceiling = benchmark::iagg_max(point, table, noise, budget, form).iagg_max_dbm;
    const auto base_seed = std::get<UniformDiscPlacement>(scenario_template.placement).seed;

    const auto &disc = std::get<UniformDiscPlacement>(scenario_template.placement);
    const auto &victim = scenario_template.victim;
    const auto &path_loss = scenario_template.path_loss;
    const double rx_gain = scenario_template.rx_gain_db;

    // Hot loop below mirrors path_loss_db() term for term without re-validating.
    const bool log_distance = path_loss.kind == PathLossKind::LogDistance;
    const double loss_at_d0 = free_space_db(path_loss.frequency_hz, path_loss.d0_m);

    // Listed offenders do not move between trials.
    double fixed_w = 0.0;
    for (const auto &o : scenario_template.offenders)
        fixed_w += received_power_w(o, victim, path_loss, rx_gain);

    std::vector<double> margins(static_cast<std::size_t>(trials));
    auto run_range = [&](std::size_t begin, std::size_t end) {
        UniformDiscPlacement trial = disc;
        for (std::size_t t = begin; t < end; ++t) {
            trial.seed = trial_seed(base_seed, t);
            // Same left-to-right summation order as aggregate_interference().
            double total = fixed_w;
            for_each_disc_position(trial, victim, [&](int i, const Position &p) {
                const double distance = distance_m(p, victim);
                if (!(distance > 0.0) || (log_distance && distance < path_loss.d0_m))
                    received_power_w({p, trial.eirp_dbm, "disc[" + std::to_string(i) + "]"}, victim, path_loss,
                                     rx_gain);  // throws with the label
                const double loss = log_distance ? loss_at_d0 + 10.0 * path_loss.exponent *
                                                                    std::log10(distance / path_loss.d0_m)
                                                 : free_space_db(path_loss.frequency_hz, distance);
                total += dbm_to_watts(trial.eirp_dbm - loss + rx_gain);
            });
            margins[t] = make_verdict(radiometry::PowerQuantity(total, radiometry::PowerRole::Interference).dbm(),
                                      ceiling)
                             .margin_db;
        }
    };

    const std::size_t n = margins.size();
    const std::size_t workers =
        n < 512 ? 1 : std::max<std::size_t>(1, std::min<std::size_t>(16, std::thread::hardware_concurrency()));
    if (workers == 1) {
        run_range(0, n);
    } else {
        std::vector<std::future<void>> tasks;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t begin = 0; begin < n; begin += chunk)
            tasks.push_back(std::async(std::launch::async, run_range, begin, std::min(n, begin + chunk)));
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
    }

    OutageReport report;
    report.trials = trials;
    report.failures = static_cast<int>(std::count_if(margins.begin(), margins.end(), [](double m) { return m < 0.0; }));
    report.outage_probability = static_cast<double>(report.failures) / trials;
    report.ceiling_dbm = ceiling;
    report.seed = base_seed;

    std::sort(margins.begin(), margins.end());
    report.margin_min_db = margins.front();
    report.margin_max_db = margins.back();
    const std::size_t mid = n / 2;
    report.margin_median_db = (n % 2 == 1) ? margins[mid] : 0.5 * (margins[mid - 1] + margins[mid]);
    return report;
}

} // namespace mbwa::field
