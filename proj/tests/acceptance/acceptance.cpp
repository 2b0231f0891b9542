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

// Acceptance suite: one line per numeric criterion, then two end-to-end
// checks through the command-line layer. Exit status is nonzero if any line
// fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "mbwa/cli.hpp"
#include "mbwa/io.hpp"
#include "mbwa/reproduce.hpp"

namespace {

// Two outage runs written through --out must produce the same bytes.
bool outage_files_identical()
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "mbwa_acceptance_outage_a.json";
    const auto b = dir / "mbwa_acceptance_outage_b.json";
    const std::string scenario_text(mbwa::io::bundled_scenario_text());
    for (const auto &path : {a, b}) {
        mbwa::cli::RunConfig config;
        config.command = mbwa::cli::Command::Outage;
        config.scenario_text = scenario_text;
        config.trials = 5000;
        config.seed = 802020;
        config.max_outage = 1.0;
        config.out = path;
        std::ostringstream out, err;
        if (mbwa::cli::execute(config, out, err) != mbwa::cli::kExitPass)
            return false;
    }
    const bool same = mbwa::io::read_file(a) == mbwa::io::read_file(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    return same;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const auto checks = mbwa::reproduce::run_checks(mbwa::reproduce::default_inputs());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int failed = 0;
    for (const auto &c : checks) {
        std::printf("%s\n", mbwa::reproduce::format_check(c).c_str());
        failed += c.pass ? 0 : 1;
    }

    const bool files_same = outage_files_identical();
    std::printf("[%s] 10f outage --out files with identical seed are byte-identical\n", files_same ? "PASS" : "FAIL");
    failed += files_same ? 0 : 1;

    const bool fast = seconds < 10.0;
    std::printf("[%s] t   full check run under 10 s  measured=%.3g s\n", fast ? "PASS" : "FAIL", seconds);
    failed += fast ? 0 : 1;

    const int total = static_cast<int>(checks.size()) + 2;
    std::printf("%d/%d acceptance lines passed\n", total - failed, total);
    return failed == 0 ? 0 : 1;
}
