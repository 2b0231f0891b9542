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

#include "mbwa/radiometry.hpp"

#include <cmath>
#include <string>

#include "mbwa/error.hpp"
#include "mbwa/units.hpp"

namespace mbwa::radiometry {

namespace {

void require_bandwidth(double bandwidth_hz)
{
    require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0, "bandwidth_hz: must be positive");
}

} // namespace

void ReceiverNoiseModel::validate() const
{
    require(std::isfinite(t_ref_k) && t_ref_k > 0.0, "t_ref: must be positive kelvin");
    require(std::isfinite(t_ant_k) && t_ant_k > 0.0, "t_ant: must be positive kelvin");
    require(std::isfinite(nf_db) && nf_db >= 0.0, "nf_db: noise figure must be >= 0 dB");
    require(std::isfinite(g_ant_db) && g_ant_db >= 0.0, "g_ant_db: antenna gain must be >= 0 dB");
    require(std::isfinite(g_amp_db) && g_amp_db >= 0.0, "g_amp_db: amplifier gain must be >= 0 dB");
}

std::string_view to_string(PowerRole role)
{
    switch (role) {
    case PowerRole::Signal:
        return "signal";
    case PowerRole::Interference:
        return "interference";
    case PowerRole::Noise:
        return "noise";
    }
    return "unknown";
}

PowerQuantity::PowerQuantity(double watts, PowerRole role) : watts_(watts), role_(role)
{
    if (!(std::isfinite(watts) && watts >= 0.0))
        throw ValidationError(std::string(to_string(role)) + " power: must be finite and non-negative");
}

PowerQuantity PowerQuantity::from_dbm(double dbm, PowerRole role)
{
    require(std::isfinite(dbm), std::string(to_string(role)) + " power: dBm value must be finite");
    return PowerQuantity(dbm_to_watts(dbm), role);
}

double PowerQuantity::dbw() const
{
    if (!(watts_ > 0.0))
        throw ValidationError(std::string(to_string(role_)) + " power: dB undefined for zero power");
    return to_db(watts_);
}

double PowerQuantity::dbm() const { return dbw() + 30.0; }

double amp_temperature(const ReceiverNoiseModel &model)
{
    model.validate();
    return model.t_ref_k * from_db_minus_one(model.nf_db);
}

PowerQuantity system_noise_power(const ReceiverNoiseModel &model, double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    const double t_sys = model.t_ant_k + amp_temperature(model);
    return PowerQuantity(kBoltzmann * bandwidth_hz * t_sys, PowerRole::Noise);
}

NoiseBreakdown noise_breakdown(const ReceiverNoiseModel &model, double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    const double g_amp = from_db(model.g_amp_db);
    const double kb = kBoltzmann * bandwidth_hz;
    const double n_ant = kb * model.t_ant_k * g_amp;
    const double n_amp = kb * amp_temperature(model) * g_amp;
    return {n_ant, n_amp, n_ant + n_amp};
}

double sinr_out(const PowerQuantity &p_rx, const PowerQuantity &i_agg, const ReceiverNoiseModel &model,
                double bandwidth_hz)
{
    const double denominator = i_agg.watts() + system_noise_power(model, bandwidth_hz).watts();
    require(denominator > 0.0, "sinr_out: interference plus noise is zero");
    return p_rx.watts() / denominator;
}

double snr_in(const PowerQuantity &p_rx, const ReceiverNoiseModel &model, double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    model.validate();
    return p_rx.watts() / (kBoltzmann * bandwidth_hz * model.t_ant_k);
}

double sinr_in(const PowerQuantity &p_rx, const PowerQuantity &i_agg, const ReceiverNoiseModel &model,
               double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    model.validate();
    return p_rx.watts() / (i_agg.watts() + kBoltzmann * bandwidth_hz * model.t_ant_k);
}

LossReport losses(const PowerQuantity &i_agg, const ReceiverNoiseModel &model, double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    const double t_amp = amp_temperature(model);
    const double t_ant = model.t_ant_k;
    // Interference expressed as an equivalent input temperature.
    const double t_int = i_agg.watts() / (kBoltzmann * bandwidth_hz);
    return {
        1.0 + t_amp / t_ant,
        1.0 + t_amp / (t_ant + t_int),
        1.0 + t_int / (t_ant + t_amp),
    };
}

PowerQuantity iagg_from_degradation(double d_db, const ReceiverNoiseModel &model, double bandwidth_hz)
{
    require(std::isfinite(d_db) && d_db > 0.0, "degradation budget must be positive");
    const double n0 = system_noise_power(model, bandwidth_hz).watts();
    return PowerQuantity(n0 * from_db_minus_one(d_db), PowerRole::Interference);
}

bool nf_floor_holds(const ReceiverNoiseModel &model, double relative_tolerance)
{
    model.validate();
    const bool near_reference = std::abs(model.t_ant_k - model.t_ref_k) <= relative_tolerance * model.t_ref_k;
    if (!near_reference)
        return true;
    return amp_temperature(model) > model.t_ant_k && model.nf_db > 3.0;
}

} // namespace mbwa::radiometry
