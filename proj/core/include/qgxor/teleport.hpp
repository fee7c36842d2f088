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
#include <vector>

#include "qgxor/gates.hpp"
#include "qgxor/random.hpp"
#include "qgxor/state.hpp"

namespace qgxor::teleport {

using gates::BellLabel;

/// Subsystem layout: the input is qudit 0, the shared pair is (1, 2); Alice
/// measures (0, 1) and Bob holds qudit 2.
struct TeleportRecord {
    BellLabel outcome;
    double probability;
    PureState bob_pre_correction;
    PureState bob_post_correction;
    double fidelity_with_input;
    double classical_bits;
};

/// Bits Alice must send: 2 log2 D.
[[nodiscard]] double classical_bits(Dim D);

/// Max amplitude deviation between |chi>|psi_jk>_{23} and
/// sum_lm |psi_lm>_{12} exp(-i 2 pi j m / D) / D  U_lm |chi>.
[[nodiscard]] double verify_teleport_identity(const PureState& chi, Dit j, Dit k);

/// Runs the protocol with Alice's outcome forced to `outcome`.
[[nodiscard]] TeleportRecord teleport(const PureState& chi, Dit j, Dit k, BellLabel outcome);

/// Runs the protocol with Alice's outcome sampled from `rng`.
[[nodiscard]] TeleportRecord teleport(const PureState& chi, Dit j, Dit k, Rng& rng);

struct TeleportTrial {
    std::size_t index;
    int j;
    int k;
    TeleportRecord record;
};

struct TeleportSummary {
    int D;
    std::uint64_t seed;
    double classical_bits;
    double min_fidelity;
    double mean_fidelity;
    /// max |p(l, m) - 1/D^2| over the sampled trials.
    double max_probability_deviation;
    /// Flat index l*D + m.
    std::vector<std::size_t> outcome_counts;
    /// Pearson statistic of `outcome_counts` against the uniform distribution.
    double chi_square;
    std::vector<TeleportTrial> trials;
};

/// Teleports `trials` Haar-random inputs through randomly labelled pairs.
/// Trial t draws from its own generator seeded with derive_seed(seed, t).
[[nodiscard]] TeleportSummary teleport_demo(Dim D, std::size_t trials, std::uint64_t seed);

}  // namespace qgxor::teleport
