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

#include "mbwa/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mbwa/cli.hpp"
#include "mbwa/interference_field.hpp"
#include "mbwa/io.hpp"
#include "mbwa/units.hpp"

namespace mbwa::reproduce {

namespace {

using rates::Duplexing;
using rates::Extremity;
using rates::Link;
using rates::Mobility;
using rates::Mode;

constexpr Duplexing kDuplexings[] = {Duplexing::Fdd, Duplexing::Tdd};
constexpr Link kLinks[] = {Link::Downlink, Link::Uplink};
constexpr Extremity kExtremities[] = {Extremity::Low, Extremity::High};
constexpr Mobility kMobilities[] = {Mobility::Pedestrian, Mobility::Highspeed};

// Tracks the sample that deviates most from the expected value.
struct Worst
{
    double expected;
    double measured = std::nan("");
    double deviation = -1.0;

    void add(double value)
    {
        const double dev = std::isnan(value) ? INFINITY : std::abs(value - expected);
        if (dev > deviation) {
            deviation = dev;
            measured = value;
        }
    }
};

Check within(std::string id, std::string description, const Worst &w, double tolerance)
{
    return {std::move(id), std::move(description), w.measured, w.expected, tolerance, w.deviation <= tolerance};
}

Check below(std::string id, std::string description, double measured, double tolerance)
{
    return {std::move(id), std::move(description), measured, 0.0, tolerance, measured < tolerance};
}

double ceiling(const Inputs &in, Mode mode, Duplexing dup, double bw, Link link, Extremity ext, Mobility mob,
               benchmark::ConstantForm form = benchmark::ConstantForm::Exact)
{
    return benchmark::iagg_max({mode, dup, bw, link, ext, mob}, in.table, in.noise, in.budget, form).iagg_max_dbm;
}

std::vector<double> route_grid(Duplexing dup)
{
    if (dup == Duplexing::Fdd)
        return {2.5e6, 5e6, 10e6, 20e6};
    return {5e6, 10e6, 20e6, 40e6};
}

// Independent of field::received_power_w: free-space Friis written out.
double friis_received_w(const field::Offender &o, double frequency_hz)
{
    const double d = std::sqrt(o.position.x_m * o.position.x_m + o.position.y_m * o.position.y_m);
    const double gain = std::pow(kSpeedOfLight / (4.0 * kPi * d * frequency_hz), 2.0);
    return 1e-3 * std::pow(10.0, o.eirp_dbm / 10.0) * gain;
}

double pairwise_sum(const std::vector<double> &v, std::size_t begin, std::size_t end)
{
    if (end - begin == 1)
        return v[begin];
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_sum(v, begin, mid) + pairwise_sum(v, mid, end);
}

std::vector<field::Offender> fixed_offenders()
{
    const double xy[8][3] = {{12.0, 3.0, -10.0},   {-40.0, 25.0, 5.0},  {7.5, -7.5, -30.0}, {150.0, 0.0, 20.0},
                             {-3.0, -60.0, -2.5},  {90.0, 90.0, 11.0},  {-15.0, 2.0, -45.0}, {0.0, 300.0, 30.0}};
    std::vector<field::Offender> out;
    for (int i = 0; i < 8; ++i)
        out.push_back({{xy[i][0], xy[i][1]}, xy[i][2], "o" + std::to_string(i)});
    return out;
}

} // namespace

Inputs default_inputs()
{
    const auto &p = io::bundled_parameters();
    return {p.table, p.receiver, p.budget};
}

std::vector<Check> run_checks(const Inputs &in)
{
    std::vector<Check> checks;

    // 1: closed-form constant.
    {
        Worst exact{-138.599};
        exact.add(benchmark::ceiling_constant_db(benchmark::ConstantForm::Exact));
        checks.push_back(within("1a", "ceiling constant 10log10(k)+90 (dB)", exact, 1e-3));
        Worst rounded{benchmark::ceiling_constant_db(benchmark::ConstantForm::Exact)};
        rounded.add(benchmark::ceiling_constant_db(benchmark::ConstantForm::PaperRounded));
        checks.push_back(within("1b", "published -138.6 vs exact constant (dB)", rounded, 2e-3));
    }

    // 2: closed form against the compositional route.
    {
        Worst gap{0.0};
        for (auto dup : kDuplexings)
            for (double bw : route_grid(dup))
                for (auto link : kLinks)
                    for (auto ext : kExtremities)
                        for (auto mob : kMobilities) {
                            const rates::OperatingPoint p{Mode::Ofdma, dup, bw, link, ext, mob};
                            const double closed = ceiling(in, Mode::Ofdma, dup, bw, link, ext, mob,
                                                          benchmark::ConstantForm::PaperRounded);
                            gap.add(closed - benchmark::iagg_max_compositional_dbm(p, in.table, in.noise, in.budget));
                        }
        for (int n = 1; n <= 8; ++n)
            for (auto link : kLinks)
                for (auto mob : kMobilities) {
                    const rates::OperatingPoint p{Mode::Mc625k, Duplexing::Tdd, n * rates::kMc625kCarrierHz,
                                                  link,        Extremity::Low, mob};
                    const double closed = ceiling(in, Mode::Mc625k, Duplexing::Tdd, p.bandwidth_hz, link,
                                                  Extremity::Low, mob, benchmark::ConstantForm::PaperRounded);
                    gap.add(closed - benchmark::iagg_max_compositional_dbm(p, in.table, in.noise, in.budget));
                }
        checks.push_back(within("2", "closed form vs compositional route, max gap (dB)", gap, 0.05));
    }

    // 3: OFDMA diversity margins.
    {
        Worst dl{6.53};
        Worst ul{8.75};
        for (auto dup : kDuplexings) {
            const auto grid = rates::default_grid(Mode::Ofdma, dup);
            for (auto mob : kMobilities)
                for (auto link : kLinks) {
                    const auto lo = benchmark::benchmark_sweep({Mode::Ofdma, dup, link, Extremity::Low, mob}, grid,
                                                               in.table, in.noise, in.budget);
                    const auto hi = benchmark::benchmark_sweep({Mode::Ofdma, dup, link, Extremity::High, mob}, grid,
                                                               in.table, in.noise, in.budget);
                    for (double m : benchmark::diversity_margin(lo, hi))
                        (link == Link::Downlink ? dl : ul).add(m);
                }
        }
        checks.push_back(within("3a", "OFDMA DL diversity margin (dB)", dl, 0.01));
        checks.push_back(within("3b", "OFDMA UL diversity margin (dB)", ul, 0.01));
    }

    // 4: MC625K DL-UL rate gap.
    {
        Worst gap{4.17};
        for (int n = 1; n <= 64; ++n) {
            rates::OperatingPoint p{Mode::Mc625k, Duplexing::Tdd, n * rates::kMc625kCarrierHz, Link::Downlink,
                                    Extremity::Low, Mobility::Pedestrian};
            const double dl = rates::peak_rate(in.table, p);
            p.link = Link::Uplink;
            gap.add(to_db(dl / rates::peak_rate(in.table, p)));
        }
        checks.push_back(within("4", "MC625K DL-UL rate gap (dB-Mbps)", gap, 0.01));
    }

    // 5: supreme DL and UL curves coincide.
    {
        Worst diff{0.0};
        for (auto dup : kDuplexings)
            for (double bw : rates::default_grid(Mode::Ofdma, dup))
                for (auto mob : kMobilities)
                    diff.add(ceiling(in, Mode::Ofdma, dup, bw, Link::Downlink, Extremity::High, mob) -
                             ceiling(in, Mode::Ofdma, dup, bw, Link::Uplink, Extremity::High, mob));
        checks.push_back(within("5", "OFDMA supreme DL minus UL ceiling (dB)", diff, 1e-9));
    }

    // 6: MC625K highspeed UL over pedestrian DL.
    {
        Worst offset{0.087};
        for (double bw : rates::default_grid(Mode::Mc625k, Duplexing::Tdd))
            offset.add(ceiling(in, Mode::Mc625k, Duplexing::Tdd, bw, Link::Uplink, Extremity::Low, Mobility::Highspeed) -
                       ceiling(in, Mode::Mc625k, Duplexing::Tdd, bw, Link::Downlink, Extremity::Low,
                               Mobility::Pedestrian));
        checks.push_back(within("6", "MC625K highspeed-UL minus pedestrian-DL ceiling (dB)", offset, 0.005));
    }

    // 7: mobility surplus.
    {
        Worst surplus{to_db(4.0 / 3.0)};
        Worst factor{1.33};
        auto add = [&](Mode mode, Duplexing dup, double bw, Link link, Extremity ext) {
            const double s = ceiling(in, mode, dup, bw, link, ext, Mobility::Highspeed) -
                             ceiling(in, mode, dup, bw, link, ext, Mobility::Pedestrian);
            surplus.add(s);
            factor.add(from_db(s));
        };
        for (auto dup : kDuplexings)
            for (double bw : rates::default_grid(Mode::Ofdma, dup))
                for (auto link : kLinks)
                    for (auto ext : kExtremities)
                        add(Mode::Ofdma, dup, bw, link, ext);
        for (double bw : rates::default_grid(Mode::Mc625k, Duplexing::Tdd))
            for (auto link : kLinks)
                add(Mode::Mc625k, Duplexing::Tdd, bw, link, Extremity::Low);
        checks.push_back(within("7a", "highspeed minus pedestrian ceiling (dB)", surplus, 1e-6));
        checks.push_back(within("7b", "mobility surplus as linear factor", factor, 0.005));
    }

    // 8: radiometry inversion and the loss-ratio identities over random inputs.
    {
        std::mt19937_64 rng(0x802020ULL);
        std::uniform_real_distribution<double> t_ref(150.0, 400.0), t_ant(10.0, 1000.0), nf(0.01, 20.0),
            g_amp(0.0, 40.0), log_bw(3.0, 9.0), d_db(1e-3, 30.0);
        double round_trip = 0.0;
        double stated_identity = 0.0;
        double full_identity = 0.0;
        const radiometry::PowerQuantity p_rx(1e-12, radiometry::PowerRole::Signal);
        for (int i = 0; i < 100000; ++i) {
            radiometry::ReceiverNoiseModel m;
            m.t_ref_k = t_ref(rng);
            m.t_ant_k = t_ant(rng);
            m.nf_db = nf(rng);
            m.g_amp_db = g_amp(rng);
            const double bw = std::pow(10.0, log_bw(rng));
            const double d = d_db(rng);
            const double d_lin = from_db(d);
            const auto i_agg = radiometry::iagg_from_degradation(d, m, bw);
            const auto l = radiometry::losses(i_agg, m, bw);
            round_trip = std::max(round_trip, std::abs(l.degradation - d_lin) / d_lin);
            stated_identity = std::max(stated_identity, std::abs(l.degradation - l.loss_snr / l.loss_sinr) / l.degradation);
            const double input_ratio =
                radiometry::snr_in(p_rx, m, bw) / radiometry::sinr_in(p_rx, i_agg, m, bw);
            const double lhs = l.degradation * l.loss_snr;
            full_identity = std::max(full_identity, std::abs(lhs - l.loss_sinr * input_ratio) / lhs);
        }
        checks.push_back(below("8a", "degradation -> I_agg -> degradation, max rel error", round_trip, 1e-12));
        checks.push_back(below("8b", "d = L_SNR / L_SINR, max rel error", stated_identity, 1e-12));
        checks.push_back(
            below("8c", "d * L_SNR = L_SINR * SNR_in / SINR_in, max rel error", full_identity, 1e-12));
    }

    // 9: aggregation against a brute-force pairwise sum.
    {
        field::PathLossModel fs;
        fs.kind = field::PathLossKind::FreeSpace;
        fs.frequency_hz = 1.9e9;
        const auto all = fixed_offenders();
        double worst = 0.0;
        for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
            std::vector<field::Offender> subset;
            std::vector<double> oracle;
            for (std::size_t j = 0; j < all.size(); ++j)
                if (mask & (1u << j)) {
                    subset.push_back(all[j]);
                    oracle.push_back(friis_received_w(all[j], fs.frequency_hz));
                }
            const double got = field::aggregate_interference(subset, {}, fs, 0.0).watts();
            const double want = pairwise_sum(oracle, 0, oracle.size());
            worst = std::max(worst, std::abs(got - want) / want);
        }
        checks.push_back(below("9a", "255 offender subsets vs pairwise sum, max rel error", worst, 1e-12));

        Worst shift{0.0};
        const field::Offender one{{30.0, 40.0}, 0.0, "m"};
        const double single_dbm = field::aggregate_interference(std::vector{one}, {}, fs, 0.0).dbm();
        for (int m = 1; m <= 16; ++m) {
            const std::vector<field::Offender> many(static_cast<std::size_t>(m), one);
            shift.add(field::aggregate_interference(many, {}, fs, 0.0).dbm() - single_dbm - to_db(m));
        }
        checks.push_back(within("9b", "m identical offenders minus (single + 10log10 m) (dB)", shift, 1e-9));
    }

    // 10: outage determinism through the command layer.
    {
        cli::RunConfig config;
        config.command = cli::Command::Outage;
        config.params = {in.table, in.noise, in.budget};
        config.scenario_text = std::string(io::bundled_scenario_text());
        config.trials = 2000;
        config.seed = 7;
        std::ostringstream out1, out2, err;
        cli::execute(config, out1, err);
        cli::execute(config, out2, err);
        const bool same = !out1.str().empty() && out1.str() == out2.str();
        checks.push_back({"10", "outage reports with identical seed are byte-identical", same ? 1.0 : 0.0, 1.0, 0.0,
                          same});
    }
    return checks;
}

std::string format_check(const Check &c)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), "[%s] %-3s %-58s measured=%.10g expected=%.10g tol=%g", c.pass ? "PASS" : "FAIL",
                  c.id.c_str(), c.description.c_str(), c.measured, c.expected, c.tolerance);
    return buf;
}

} // namespace mbwa::reproduce
