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

#include "mbwa/rate_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "mbwa/error.hpp"

namespace mbwa::rates {

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Relative slack for comparing bandwidths against range ends and carrier
// multiples; grids are built from decimal MHz values.
constexpr double kBandwidthSlack = 1e-9;

bool within(double value, double lo, double hi)
{
    return value >= lo * (1.0 - kBandwidthSlack) && value <= hi * (1.0 + kBandwidthSlack);
}

} // namespace

std::string_view to_string(Mode v) { return v == Mode::Ofdma ? "ofdma" : "mc625k"; }
std::string_view to_string(Duplexing v) { return v == Duplexing::Fdd ? "fdd" : "tdd"; }
std::string_view to_string(Link v) { return v == Link::Downlink ? "dl" : "ul"; }
std::string_view to_string(Extremity v) { return v == Extremity::Low ? "low" : "high"; }
std::string_view to_string(Mobility v) { return v == Mobility::Pedestrian ? "pedestrian" : "highspeed"; }

Mode parse_mode(std::string_view s)
{
    const auto v = lower(s);
    if (v == "ofdma")
        return Mode::Ofdma;
    if (v == "mc625k" || v == "625k-mc")
        return Mode::Mc625k;
    throw ValidationError("mode: expected 'ofdma' or 'mc625k', got '" + std::string(s) + "'");
}

Duplexing parse_duplexing(std::string_view s)
{
    const auto v = lower(s);
    if (v == "fdd")
        return Duplexing::Fdd;
    if (v == "tdd")
        return Duplexing::Tdd;
    throw ValidationError("duplexing: expected 'fdd' or 'tdd', got '" + std::string(s) + "'");
}

Link parse_link(std::string_view s)
{
    const auto v = lower(s);
    if (v == "dl" || v == "downlink")
        return Link::Downlink;
    if (v == "ul" || v == "uplink")
        return Link::Uplink;
    throw ValidationError("link: expected 'dl' or 'ul', got '" + std::string(s) + "'");
}

Extremity parse_extremity(std::string_view s)
{
    const auto v = lower(s);
    if (v == "low")
        return Extremity::Low;
    if (v == "high")
        return Extremity::High;
    throw ValidationError("extremity: expected 'low' or 'high', got '" + std::string(s) + "'");
}

Mobility parse_mobility(std::string_view s)
{
    const auto v = lower(s);
    if (v == "pedestrian")
        return Mobility::Pedestrian;
    if (v == "highspeed")
        return Mobility::Highspeed;
    throw ValidationError("mobility: expected 'pedestrian' or 'highspeed', got '" + std::string(s) + "'");
}

void OperatingPoint::validate() const
{
    require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0, "bandwidth_hz: must be positive");
    if (mode == Mode::Ofdma) {
        if (duplexing == Duplexing::Fdd)
            require(within(bandwidth_hz, 2.5e6, 20e6), "bandwidth_hz: OFDMA FDD requires 2.5 to 20 MHz");
        else
            require(within(bandwidth_hz, 5e6, 40e6), "bandwidth_hz: OFDMA TDD requires 5 to 40 MHz");
        return;
    }
    require(duplexing == Duplexing::Tdd, "duplexing: MC625K operates in TDD only");
    const double n = bandwidth_hz / kMc625kCarrierHz;
    const double rounded = std::round(n);
    require(rounded >= 1.0 && std::abs(n - rounded) <= kBandwidthSlack * rounded,
            "bandwidth_hz: MC625K requires an integer multiple n >= 1 of 625 kHz");
}

int OperatingPoint::carrier_count() const
{
    return static_cast<int>(std::lround(bandwidth_hz / kMc625kCarrierHz));
}

RateTable::ReferenceKey RateTable::normalize(Mode mode, Duplexing duplexing, Link link, Extremity extremity)
{
    if (mode == Mode::Mc625k)
        extremity = Extremity::Low;
    return {mode, duplexing, link, extremity};
}

void RateTable::set_reference(Mode mode, Duplexing duplexing, Link link, Extremity extremity, ReferenceRate ref)
{
    require(std::isfinite(ref.r0_bps) && ref.r0_bps > 0.0, "r0_mbps: reference rate must be positive");
    require(std::isfinite(ref.b0_hz) && ref.b0_hz > 0.0, "b0_mhz: reference band must be positive");
    require(mode == Mode::Ofdma || duplexing == Duplexing::Tdd, "duplexing: MC625K operates in TDD only");
    references_[normalize(mode, duplexing, link, extremity)] = ref;
}

void RateTable::set_eta(Mobility mobility, Link link, double eta_bps_hz)
{
    require(std::isfinite(eta_bps_hz) && eta_bps_hz > 0.0, "eta_bps_hz: spectral efficiency must be positive");
    etas_[{mobility, link}] = eta_bps_hz;
}

const ReferenceRate &RateTable::reference(Mode mode, Duplexing duplexing, Link link, Extremity extremity) const
{
    const auto it = references_.find(normalize(mode, duplexing, link, extremity));
    if (it == references_.end())
        throw ValidationError("rate table: no reference rate for " + std::string(to_string(mode)) + "/" +
                              std::string(to_string(duplexing)) + "/" + std::string(to_string(link)) + "/" +
                              std::string(to_string(extremity)));
    return it->second;
}

double RateTable::eta(Mobility mobility, Link link) const
{
    const auto it = etas_.find({mobility, link});
    if (it == etas_.end())
        throw ValidationError("rate table: no spectral efficiency for " + std::string(to_string(mobility)) + "/" +
                              std::string(to_string(link)));
    return it->second;
}

double spectral_efficiency(const RateTable &table, Mobility mobility, Link link)
{
    return table.eta(mobility, link);
}

double peak_rate(const RateTable &table, const OperatingPoint &point)
{
    point.validate();
    const auto &ref = table.reference(point.mode, point.duplexing, point.link, point.extremity);
    return point.bandwidth_hz * ref.r0_bps / ref.b0_hz;
}

std::vector<RatePoint> rate_sweep(const RateTable &table, Mode mode, Duplexing duplexing, Link link,
                                  Extremity extremity, std::span<const double> grid_hz)
{
    std::vector<RatePoint> out;
    out.reserve(grid_hz.size());
    for (std::size_t i = 0; i < grid_hz.size(); ++i) {
        const OperatingPoint point{mode, duplexing, grid_hz[i], link, extremity, Mobility::Pedestrian};
        try {
            out.push_back({grid_hz[i], peak_rate(table, point)});
        } catch (const ValidationError &e) {
            throw ValidationError("grid[" + std::to_string(i) + "]: " + e.what());
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RatePoint &a, const RatePoint &b) { return a.bandwidth_hz < b.bandwidth_hz; });
    return out;
}

std::vector<double> default_grid(Mode mode, Duplexing duplexing)
{
    std::vector<double> grid;
    if (mode == Mode::Mc625k) {
        for (int n = 1; n <= 64; ++n)
            grid.push_back(n * kMc625kCarrierHz);
        return grid;
    }
    // Integer steps of 100 kHz avoid accumulating rounding error.
    const int first = duplexing == Duplexing::Fdd ? 25 : 50;
    const int last = duplexing == Duplexing::Fdd ? 200 : 400;
    for (int step = first; step <= last; ++step)
        grid.push_back(step * 1e5);
    return grid;
}

} // namespace mbwa::rates
