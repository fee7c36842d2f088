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
#include <span>
#include <vector>

#include "qgxor/state.hpp"

namespace qgxor {

// Kronecker composites. Subsystem order is preserved: the dims of the result
// are the dims of `a` followed by the dims of `b`. Mixing kinds does not compile.
[[nodiscard]] PureState tensor(const PureState& a, const PureState& b);
[[nodiscard]] DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
[[nodiscard]] UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b);

/// Reduced state over the subsystems listed in `keep` (any order, no
/// duplicates). The kept subsystems appear in ascending order in the result.
[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

struct PostSelection {
    DensityMatrix state;
    double probability;
};

/// Projects `subsystem` onto |ket>, removes it, and renormalizes. Throws
/// ImpossibleOutcome when the outcome probability is below 1e-15.
[[nodiscard]] PostSelection post_select(const DensityMatrix& rho, std::size_t subsystem, Dit ket);

/// <psi|rho|psi>.
[[nodiscard]] double fidelity(const PureState& psi, const DensityMatrix& rho);

[[nodiscard]] Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>| = 1 within `tol`, i.e. equality up to a global phase.
[[nodiscard]] bool equal_up_to_phase(const PureState& a, const PureState& b, Tolerance tol = {});

/// Applies `op` to the subsystems `targets` of a state. `op`'s k-th subsystem
/// acts on `targets[k]`; dimensions must agree.
[[nodiscard]] PureState apply(const UnitaryOp& op, const PureState& psi,
                              std::span<const std::size_t> targets);
[[nodiscard]] DensityMatrix apply(const UnitaryOp& op, const DensityMatrix& rho,
                                  std::span<const std::size_t> targets);
/// Whole-system application; dims must match exactly.
[[nodiscard]] PureState apply(const UnitaryOp& op, const PureState& psi);
[[nodiscard]] DensityMatrix apply(const UnitaryOp& op, const DensityMatrix& rho);

/// F|l> = D^{-1/2} sum_k exp(+i 2 pi l k / D) |k>.
[[nodiscard]] UnitaryOp dft_unitary(Dim D);

/// The (D-1)-point DFT on span{|0>,...,|D-2>} and identity on |D-1>.
[[nodiscard]] UnitaryOp truncated_dft_unitary(Dim D);

namespace kernels {

/// Flat offsets of each local index of `targets` (row-major over the targets
/// in the given order) and of each assignment of the remaining subsystems.
struct SubsystemSplit {
    std::vector<std::size_t> target_offsets;
    std::vector<std::size_t> rest_offsets;
};

[[nodiscard]] SubsystemSplit split_subsystems(const Dims& dims, std::span<const std::size_t> targets);

/// rows <- op (acting on targets) * rows; each column of `m` is a ket.
void apply_left(const CMatrix& op, const SubsystemSplit& split, CMatrix& m);

/// cols <- cols * op^dagger (acting on targets).
void apply_right_adjoint(const CMatrix& op, const SubsystemSplit& split, CMatrix& m);

}  // namespace kernels

}  // namespace qgxor
