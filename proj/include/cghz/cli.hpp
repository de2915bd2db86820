// Copyright 2026 The cghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cghz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

struct RunConfig {
    std::string command;
    int n = 3;
    int m = 2;
    std::string state;
    std::vector<double> eta_p{0.9};
    std::vector<double> eta_a{0.9};
    std::vector<double> p_error{0.05};
    std::vector<double> sigma;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";

    double kappa = 1.0;
    double omega_c = 0.0;
    std::optional<double> omega_0;
    std::optional<double> lambda;
    double gamma = 0.0;
    std::optional<double> omega_p_min;
    std::optional<double> omega_p_max;
    std::size_t points = 401;
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or to --output), diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

int cmd_analyze(const RunConfig &cfg, std::ostream &out);
int cmd_verify(const RunConfig &cfg, std::ostream &out);
int cmd_noise(const RunConfig &cfg, std::ostream &out);
int cmd_sigma_sweep(const RunConfig &cfg, std::ostream &out);
int cmd_cavity(const RunConfig &cfg, std::ostream &out);

} // namespace cghz::cli
