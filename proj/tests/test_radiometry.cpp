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

#include <doctest.h>

#include <cmath>
#include <random>

#include "mbwa/error.hpp"
#include "mbwa/radiometry.hpp"
#include "mbwa/units.hpp"
#include "oracles.hpp"

using namespace mbwa;
using namespace mbwa::radiometry;

namespace {

ReceiverNoiseModel table2()
{
    return {290.0, 288.0, 10.0, 0.0, 0.0};
}

PowerQuantity interference(double w) { return {w, PowerRole::Interference}; }
PowerQuantity signal(double w) { return {w, PowerRole::Signal}; }

} // namespace

TEST_CASE("amp_temperature")
{
    auto m = table2();
    m.nf_db = 0.0;
    CHECK(amp_temperature(m) == 0.0);
    m.nf_db = 10.0 * std::log10(2.0);
    CHECK(amp_temperature(m) == doctest::Approx(290.0).epsilon(1e-12));
    m.nf_db = 10.0;
    CHECK(amp_temperature(m) == doctest::Approx(2610.0).epsilon(1e-12));
}

TEST_CASE("system_noise_power")
{
    // k * 2.5e6 * 2898, multiplied out by hand.
    const auto n0 = system_noise_power(table2(), 2.5e6);
    CHECK(n0.watts() == doctest::Approx(1.000280925e-13).epsilon(1e-9));
    CHECK(n0.dbm() == doctest::Approx(-100.0).epsilon(1e-4));

    SUBCASE("no noise sources")
    {
        ReceiverNoiseModel m = table2();
        m.t_ant_k = 1e-300;
        m.nf_db = 0.0;
        CHECK(system_noise_power(m, 1e6).watts() < 1e-300);
    }
    SUBCASE("linear in bandwidth")
    {
        CHECK(system_noise_power(table2(), 5e6).watts() == doctest::Approx(2.0 * n0.watts()).epsilon(1e-15));
    }
    SUBCASE("rejects non-positive bandwidth")
    {
        CHECK_THROWS_AS(system_noise_power(table2(), 0.0), ValidationError);
        CHECK_THROWS_AS(system_noise_power(table2(), -1.0), ValidationError);
    }
}

TEST_CASE("sinr_out")
{
    const auto m = table2();
    const double bw = 2.5e6;
    const double n0 = system_noise_power(m, bw).watts();
    const auto p = signal(1e-11);

    CHECK(sinr_out(p, interference(0.0), m, bw) == doctest::Approx(p.watts() / n0));
    CHECK(sinr_out(signal(3e-13 + n0), interference(3e-13), m, bw) == doctest::Approx(1.0).epsilon(1e-14));

    SUBCASE("amplifier gain cancels")
    {
        auto boosted = m;
        boosted.g_amp_db += 20.0;
        CHECK(sinr_out(p, interference(2e-13), boosted, bw) == sinr_out(p, interference(2e-13), m, bw));
    }
}

TEST_CASE("losses")
{
    const auto m = table2();
    const double bw = 1e6;

    const auto clean = losses(interference(0.0), m, bw);
    CHECK(clean.loss_sinr == clean.loss_snr);
    CHECK(clean.degradation == 1.0);
    CHECK(clean.loss_snr == doctest::Approx(1.0 + 2610.0 / 288.0).epsilon(1e-14));
    CHECK(to_db(clean.loss_snr) == doctest::Approx(10.02706).epsilon(1e-6));

    const double n0 = system_noise_power(m, bw).watts();
    CHECK(to_db(losses(interference(n0), m, bw).degradation) == doctest::Approx(3.0103).epsilon(1e-5));
}

TEST_CASE("iagg_from_degradation")
{
    const auto m = table2();
    CHECK(iagg_from_degradation(10.0 * std::log10(2.0), m, 2.5e6).watts() ==
          doctest::Approx(system_noise_power(m, 2.5e6).watts()).epsilon(1e-12));

    SUBCASE("matches the longhand inversion")
    {
        const double expected = oracle::iagg_dbm_longhand(0.5, 288.0, 290.0, 10.0, 1e6);
        CHECK(expected == doctest::Approx(-113.113925).epsilon(1e-8));
        CHECK(iagg_from_degradation(0.5, m, 1e6).dbm() == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("monotone in the budget")
    {
        double previous = 0.0;
        for (double d = 0.01; d < 20.0; d *= 1.3) {
            const double w = iagg_from_degradation(d, m, 1e6).watts();
            CHECK(w > previous);
            previous = w;
        }
    }
    SUBCASE("zero or negative budget is rejected")
    {
        CHECK_THROWS_WITH_AS(iagg_from_degradation(0.0, m, 1e6), "degradation budget must be positive",
                             ValidationError);
        CHECK_THROWS_AS(iagg_from_degradation(-1.0, m, 1e6), ValidationError);
    }
}

TEST_CASE("nf_floor_holds")
{
    CHECK(nf_floor_holds(table2()));
    CHECK_FALSE(nf_floor_holds({290.0, 290.0, 2.0, 0.0, 0.0}));  // t_amp ~ 169 K < t_ant
    CHECK(nf_floor_holds({290.0, 100.0, 2.0, 0.0, 0.0}));        // premise fails
    CHECK(nf_floor_holds({290.0, 300.0, 1.0, 0.0, 0.0}, 0.01));  // outside a tighter tolerance
}

TEST_CASE("model validation")
{
    CHECK_THROWS_AS(ReceiverNoiseModel({0.0, 288.0, 10.0, 0.0, 0.0}).validate(), ValidationError);
    CHECK_THROWS_AS(ReceiverNoiseModel({290.0, -1.0, 10.0, 0.0, 0.0}).validate(), ValidationError);
    CHECK_THROWS_AS(ReceiverNoiseModel({290.0, 288.0, 10.0, -1.0, 0.0}).validate(), ValidationError);
    CHECK_THROWS_AS(ReceiverNoiseModel({290.0, 288.0, 10.0, 0.0, -3.0}).validate(), ValidationError);
    CHECK_THROWS_AS(PowerQuantity(-1.0, PowerRole::Noise), ValidationError);
    CHECK_THROWS_AS(PowerQuantity(0.0, PowerRole::Noise).dbm(), ValidationError);
}

TEST_CASE("properties over random receivers")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> db(-300.0, 300.0), t(10.0, 1000.0), nf(0.0, 20.0), lbw(3.0, 9.0),
        d(1e-3, 30.0), gain(0.0, 60.0);
    for (int i = 0; i < 5000; ++i) {
        const double x = db(rng);
        REQUIRE(std::abs(to_db(from_db(x)) - x) <= 1e-12);

        ReceiverNoiseModel m{t(rng), t(rng), nf(rng), 0.0, gain(rng)};
        const double bw = std::pow(10.0, lbw(rng));
        const auto i_agg = iagg_from_degradation(d(rng), m, bw);
        const auto p = signal(1e-10);

        // Gain cancellation.
        auto other = m;
        other.g_amp_db = gain(rng);
        REQUIRE(sinr_out(p, i_agg, m, bw) == sinr_out(p, i_agg, other, bw));

        // SNR_in > SNR_out whenever the amplifier adds noise.
        if (amp_temperature(m) > 0.0)
            REQUIRE(snr_in(p, m, bw) > sinr_out(p, interference(0.0), m, bw));

        // Ratios of SNR/SINR at input and output tie the three losses together.
        const auto l = losses(i_agg, m, bw);
        const double lhs = l.degradation * l.loss_snr;
        const double rhs = l.loss_sinr * snr_in(p, m, bw) / sinr_in(p, i_agg, m, bw);
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * lhs);
        REQUIRE(l.loss_snr >= 1.0);
        REQUIRE(l.loss_sinr >= 1.0);
        REQUIRE(l.degradation >= 1.0);
    }
}

TEST_CASE("noise ordering near the reference temperature")
{
    for (double nf : {3.5, 5.0, 10.0, 15.0}) {
        const auto b = noise_breakdown({290.0, 288.0, nf, 0.0, 12.0}, 1e6);
        CHECK(b.n_ant_w < b.n_amp_w);
        CHECK(b.n_amp_w < b.n_out_w);
    }
}
