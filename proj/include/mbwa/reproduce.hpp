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

#include <string>
#include <vector>

#include "mbwa/benchmark.hpp"
#include "mbwa/radiometry.hpp"
#include "mbwa/rate_model.hpp"

namespace mbwa::reproduce {

struct Check
{
    std::string id;  // criterion number plus sub-letter, e.g. "3b"
    std::string description;
    double measured;
    double expected;
    double tolerance;
    bool pass;
};

struct Inputs
{
    rates::RateTable table;
    radiometry::ReceiverNoiseModel noise;
    benchmark::DegradationBudget budget;
};

// Bundled defaults.
Inputs default_inputs();

// Evaluates every published numeric claim against the given inputs.
std::vector<Check> run_checks(const Inputs &inputs);

// "[PASS] 3a  OFDMA DL diversity margin  measured=... expected=... tol=..."
std::string format_check(const Check &check);

} // namespace mbwa::reproduce
