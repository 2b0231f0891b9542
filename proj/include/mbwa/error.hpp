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

#include <stdexcept>
#include <string>

namespace mbwa {

// Raised whenever an input violates a documented invariant. The message names
// the field (and offender label, where one exists) that failed.
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const char *message)
{
    if (!condition)
        throw ValidationError(message);
}

inline void require(bool condition, const std::string &message)
{
    if (!condition)
        throw ValidationError(message);
}

} // namespace mbwa
