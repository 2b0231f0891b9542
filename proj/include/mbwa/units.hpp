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

#include <cmath>

namespace mbwa {

inline constexpr double kBoltzmann = 1.38065e-23;   // W/(K*Hz)
inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// 10^(db/10) - 1 without cancellation for small db.
inline double from_db_minus_one(double db) { return std::expm1(db * (std::log(10.0) / 10.0)); }

inline double watts_to_dbm(double watts) { return to_db(watts) + 30.0; }
inline double dbm_to_watts(double dbm) { return from_db(dbm - 30.0); }

inline constexpr double kHzPerMHz = 1e6;
inline constexpr double kBpsPerMbps = 1e6;

} // namespace mbwa
