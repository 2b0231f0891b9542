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

#include <string_view>

namespace mbwa::radiometry {

// Noise description of the antenna + amplifier front end. All temperatures in
// kelvin, gains and noise figure in dB.
struct ReceiverNoiseModel
{
    double t_ref_k = 290.0;  // temperature at which the noise figure is specified
    double t_ant_k = 288.0;  // antenna noise temperature
    double nf_db = 10.0;     // amplifier noise figure
    double g_ant_db = 0.0;
    double g_amp_db = 0.0;

    // Throws ValidationError naming the first violated field.
    void validate() const;
};

enum class PowerRole
{
    Signal,
    Interference,
    Noise
};

std::string_view to_string(PowerRole role);

// Average power in watts. Construction rejects negative or non-finite values.
class PowerQuantity
{
  public:
    PowerQuantity(double watts, PowerRole role);

    static PowerQuantity from_dbm(double dbm, PowerRole role);

    double watts() const { return watts_; }
    PowerRole role() const { return role_; }

    // Defined only for strictly positive power.
    double dbw() const;
    double dbm() const;

  private:
    double watts_;
    PowerRole role_;
};

// Linear ratios, all >= 1.
struct LossReport
{
    double loss_snr;     // SNR_in / SNR_out
    double loss_sinr;    // SINR_in / SINR_out
    double degradation;  // SNR_out / SINR_out (noise rise)
};

// Individual noise contributions at the amplifier output.
struct NoiseBreakdown
{
    double n_ant_w;  // k B T_ant G_amp
    double n_amp_w;  // k B T_amp G_amp
    double n_out_w;  // sum of the two
};

double amp_temperature(const ReceiverNoiseModel &model);

// Compound noise N0 = k B (T_ant + T_amp), referred to the amplifier input.
PowerQuantity system_noise_power(const ReceiverNoiseModel &model, double bandwidth_hz);

NoiseBreakdown noise_breakdown(const ReceiverNoiseModel &model, double bandwidth_hz);

// Output SINR. The amplifier gain multiplies signal, interference and noise
// alike, so it does not appear here.
double sinr_out(const PowerQuantity &p_rx, const PowerQuantity &i_agg, const ReceiverNoiseModel &model,
                double bandwidth_hz);

// SNR at the antenna terminals (no interference, noiseless amplifier).
double snr_in(const PowerQuantity &p_rx, const ReceiverNoiseModel &model, double bandwidth_hz);

// SINR at the antenna terminals (noiseless amplifier).
double sinr_in(const PowerQuantity &p_rx, const PowerQuantity &i_agg, const ReceiverNoiseModel &model,
               double bandwidth_hz);

LossReport losses(const PowerQuantity &i_agg, const ReceiverNoiseModel &model, double bandwidth_hz);

// Aggregate interference that produces a noise rise of d_db. d_db must be > 0.
PowerQuantity iagg_from_degradation(double d_db, const ReceiverNoiseModel &model, double bandwidth_hz);

// Design lint: when the antenna sits near the reference temperature and the
// amplifier is the dominant noise source, the noise figure must exceed 3 dB.
// Returns true when the lint does not apply.
bool nf_floor_holds(const ReceiverNoiseModel &model, double relative_tolerance = 0.05);

} // namespace mbwa::radiometry
