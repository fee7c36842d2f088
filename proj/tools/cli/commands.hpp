// Copyright 2026 The qgxor Authors
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

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "report.hpp"

namespace qgxor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternalError = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitCapacity = 3;

// Largest D each command accepts before the dense capacity guard trips.
inline constexpr int kMaxBellDim = 32;
inline constexpr int kMaxTeleportDim = 64;
inline constexpr int kMaxPurifyDim = 40;
inline constexpr int kMaxKerrDim = 64;

struct BellConfig {
    int dim = 3;
};

struct TeleportConfig {
    int dim = 3;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

struct PurifyRunConfig {
    int dim = 3;
    double lambda = 0.6;
    std::size_t max_iters = 500;
    double target = 0.999;
    unsigned copies = 1;
    std::vector<std::string> schedule{"full_dft", "truncated_dft"};
};

struct SweepConfig {
    std::string dims = "2..20";
    std::vector<double> lambdas;
    std::vector<double> lambda_offsets;
    bool entangled_only = false;
    std::size_t max_iters = 500;
    double target = 0.999;
    unsigned threads = 1;
};

struct KerrConfig {
    std::string dims = "2..8";
    double chi = 1.0;
};

/// "3", "2,3,5" or "2..20" (inclusive).
[[nodiscard]] std::vector<int> parse_dim_list(const std::string& spec);

// Each command validates its whole configuration before computing anything.
[[nodiscard]] RunReport cmd_bell(const BellConfig& config);
[[nodiscard]] RunReport cmd_teleport(const TeleportConfig& config);
[[nodiscard]] RunReport cmd_purify(const PurifyRunConfig& config);
[[nodiscard]] RunReport cmd_sweep(const SweepConfig& config);
[[nodiscard]] RunReport cmd_kerr_check(const KerrConfig& config);

/// Parses `args` (without the program name), runs the selected subcommand
/// and writes the report to `out` or to --out PATH. Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qgxor::cli
