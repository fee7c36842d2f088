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

#include <cstdint>
#include <random>

#include "qgxor/state.hpp"

namespace qgxor {

using Rng = std::mt19937_64;

/// Unitarily invariant pure state: a normalized complex Gaussian vector.
[[nodiscard]] PureState random_pure_state(const Dims& dims, Rng& rng);

/// Ginibre-ensemble density matrix G G^dagger / tr, with G of shape n x rank.
/// `rank == 0` means full rank.
[[nodiscard]] DensityMatrix random_density_matrix(const Dims& dims, Rng& rng, std::size_t rank = 0);

/// Deterministic per-stream seed derived from a master seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace qgxor
