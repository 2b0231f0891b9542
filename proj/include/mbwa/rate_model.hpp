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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace mbwa::rates {

enum class Mode
{
    Ofdma,
    Mc625k
};
enum class Duplexing
{
    Fdd,
    Tdd
};
enum class Link
{
    Downlink,
    Uplink
};
enum class Extremity
{
    Low,
    High
};
enum class Mobility
{
    Pedestrian,
    Highspeed
};

std::string_view to_string(Mode v);
std::string_view to_string(Duplexing v);
std::string_view to_string(Link v);
std::string_view to_string(Extremity v);
std::string_view to_string(Mobility v);

// Parsers accept the canonical names produced by to_string (case-insensitive)
// and throw ValidationError otherwise.
Mode parse_mode(std::string_view s);
Duplexing parse_duplexing(std::string_view s);
Link parse_link(std::string_view s);
Extremity parse_extremity(std::string_view s);
Mobility parse_mobility(std::string_view s);

inline constexpr double kMc625kCarrierHz = 625e3;

struct OperatingPoint
{
    Mode mode = Mode::Ofdma;
    Duplexing duplexing = Duplexing::Fdd;
    double bandwidth_hz = 2.5e6;
    Link link = Link::Downlink;
    Extremity extremity = Extremity::Low;
    Mobility mobility = Mobility::Pedestrian;

    // OFDMA: FDD 2.5-20 MHz, TDD 5-40 MHz. MC625K: TDD only, integer number of
    // 625 kHz carriers.
    void validate() const;

    // Number of 625 kHz carriers; only meaningful for MC625K.
    int carrier_count() const;
};

struct ReferenceRate
{
    double r0_bps;
    double b0_hz;

    bool operator==(const ReferenceRate &) const = default;
};

// Reference rates R0 with their reference band B0, and minimum spectral
// efficiencies per mobility class and link direction. MC625K carries a single
// R0 per link; its extremity is ignored on both set and lookup.
class RateTable
{
  public:
    void set_reference(Mode mode, Duplexing duplexing, Link link, Extremity extremity, ReferenceRate ref);
    void set_eta(Mobility mobility, Link link, double eta_bps_hz);

    const ReferenceRate &reference(Mode mode, Duplexing duplexing, Link link, Extremity extremity) const;
    double eta(Mobility mobility, Link link) const;

    using ReferenceKey = std::tuple<Mode, Duplexing, Link, Extremity>;
    using EtaKey = std::pair<Mobility, Link>;

    const std::map<ReferenceKey, ReferenceRate> &references() const { return references_; }
    const std::map<EtaKey, double> &etas() const { return etas_; }

    bool operator==(const RateTable &) const = default;

  private:
    static ReferenceKey normalize(Mode mode, Duplexing duplexing, Link link, Extremity extremity);

    std::map<ReferenceKey, ReferenceRate> references_;
    std::map<EtaKey, double> etas_;
};

double spectral_efficiency(const RateTable &table, Mobility mobility, Link link);

// R_b = B_CH * R0 / B0, in bit/s.
double peak_rate(const RateTable &table, const OperatingPoint &point);

struct RatePoint
{
    double bandwidth_hz;
    double rate_bps;
};

// Peak rate over a grid of channel bandwidths (Hz), sorted by bandwidth.
// Failures are rethrown as ValidationError prefixed with "grid[i]".
std::vector<RatePoint> rate_sweep(const RateTable &table, Mode mode, Duplexing duplexing, Link link,
                                  Extremity extremity, std::span<const double> grid_hz);

// 0.1 MHz steps over the duplexing range for OFDMA; n = 1..64 carriers for MC625K.
std::vector<double> default_grid(Mode mode, Duplexing duplexing);

} // namespace mbwa::rates
