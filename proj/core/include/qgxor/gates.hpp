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

#include <vector>

#include "qgxor/state.hpp"

namespace qgxor::gates {

/// Index (l, m) of the generalized Bell state psi_lm = GXOR (F|l> |m>).
struct BellLabel {
    Dit l;
    Dit m;

    friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

/// |i>|j> -> |i>|i - j mod D>. Unitary, Hermitian and an involution.
[[nodiscard]] UnitaryOp gxor_unitary(Dim D);

/// |i>|j> -> |i>|i + j mod D>. Unitary but not Hermitian for D > 2;
/// its inverse is its (D-1)-th power.
[[nodiscard]] UnitaryOp gxor_add_unitary(Dim D);

[[nodiscard]] PureState bell_state(Dit l, Dit m, Dim D);
[[nodiscard]] PureState bell_state(BellLabel label, Dim D);

/// (F^dagger (x) 1) GXOR: maps psi_lm to |l>|m>.
[[nodiscard]] UnitaryOp bell_disentangler(Dim D);

struct BellOutcome {
    BellLabel label;
    double probability;
    /// Computational-basis readout after disentangling, always (l, m).
    MultiIndex readout;
};

/// Exact outcome distribution of a generalized Bell measurement, ordered by
/// flat label l*D + m.
struct BellDistribution {
    Dim D;
    std::vector<BellOutcome> outcomes;

    [[nodiscard]] double probability(BellLabel label) const;
    [[nodiscard]] double total() const;
};

/// GXOR, inverse DFT on the first qudit, computational readout.
/// The input must consist of exactly two qudits of equal dimension.
[[nodiscard]] BellDistribution bell_measurement(const PureState& state);
[[nodiscard]] BellDistribution bell_measurement(const DensityMatrix& state);

/// Teleportation correction for outcome (l, m) with the pair prepared in
/// psi_jk: U|n> = exp(-i 2 pi n (l - j) / D) |n - k - m mod D>.
[[nodiscard]] UnitaryOp correction_unitary(Dit l, Dit m, Dit j, Dit k, Dim D);

/// Cross-Kerr interaction H = chi n1 n2 (hbar = 1) run for t = 2 pi / (D chi).
class KerrParams {
  public:
    explicit KerrParams(Dim D, double chi = 1.0);

    [[nodiscard]] Dim dim() const noexcept { return dim_; }
    [[nodiscard]] double chi() const noexcept { return chi_; }
    [[nodiscard]] double interaction_time() const noexcept;
    /// chi * t; equals 2 pi / D.
    [[nodiscard]] double phase_per_step() const noexcept;

  private:
    Dim dim_;
    double chi_;
};

/// Images of the mixed-basis product states |i>_1 |k~>_2 (mode 1 in Fock
/// basis, mode 2 in Fourier-transformed Fock basis) under Kerr evolution
/// followed by complex conjugation of the Fock-basis coordinates. Column
/// i*D + k holds the image expressed in the same mixed basis.
///
/// Phase conjugation is antilinear, so this compares basis images only; it is
/// not an operator identity on superpositions.
[[nodiscard]] CMatrix kerr_gxor_images(const KerrParams& params);
[[nodiscard]] CMatrix kerr_gxor_images(Dim D);

/// max-entry |kerr_gxor_images(D) - GXOR|.
[[nodiscard]] double kerr_gxor_residual(Dim D);

}  // namespace qgxor::gates
