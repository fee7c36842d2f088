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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qgxor/state.hpp"

namespace qgxor::purify {

/// Largest matrix axis the GXOR+projection oracle will build densely.
inline constexpr std::size_t kOracleMaxAxis = 10000;

/// Success probabilities below this are treated as vanishing.
inline constexpr double kMinSuccessProbability = 1e-15;

struct MapResult {
    DensityMatrix state;
    double success_probability;
};

/// Post-selected nonlinear map in closed form: every entry in the
/// computational basis is raised to the power 1 + N, then renormalized by
/// p_c = sum_i sigma_ii^(1+N). Multi-qudit inputs are treated as one register
/// indexed by flat multi-indices.
[[nodiscard]] MapResult nonlinear_map(const DensityMatrix& sigma, unsigned copies = 1);

enum class GateOrder {
    ControlMajor,  // for each control qudit j, for each target system i
    TargetMajor,   // for each target system i, for each control qudit j
};

/// Brute-force construction: sigma_c (x) sigma_t^(x N), one GXOR per
/// (control qudit j, target system i) pair acting on control qudit j and the
/// j-th qudit of target system i, then projection of every target qudit on
/// |0>. Returns the control state and the success probability.
/// Throws CapacityExceeded when D^(M (1 + N)) exceeds kOracleMaxAxis.
[[nodiscard]] MapResult nonlinear_map_oracle(const DensityMatrix& sigma_c, const DensityMatrix& sigma_t,
                                             std::size_t qudits_per_block, unsigned copies,
                                             GateOrder order = GateOrder::ControlMajor);

struct MapPropertiesReport {
    DensityCheck output_check;
    /// Basis index whose sign the diagonal witness Z flips.
    std::size_t flipped_index = 0;
    double witness_input_distance = 0.0;   // max |sigma - Z sigma Z^dagger|
    double witness_output_distance = 0.0;  // max |T(sigma) - T(Z sigma Z^dagger)|
    std::vector<double> fixed_point_residuals;
    bool input_pure = false;
    double output_second_eigenvalue = 0.0;

    [[nodiscard]] bool output_valid(Tolerance tol = {}) const { return output_check.ok(tol); }
    /// Distinct inputs with identical images. False when sigma is diagonal
    /// in the flipped row, where no witness of this form exists.
    [[nodiscard]] bool non_injective(Tolerance tol = {}) const;
    [[nodiscard]] bool maps_pure_to_pure(Tolerance tol = {}) const;
    [[nodiscard]] bool fixed_points_hold(Tolerance tol = {}) const;
};

/// Checks validity preservation, non-injectivity, the supplied fixed points and
/// purity preservation of `nonlinear_map(sigma, copies)`.
[[nodiscard]] MapPropertiesReport map_properties_check(const DensityMatrix& sigma,
                                                       std::span<const DensityMatrix> fixed_points = {},
                                                       unsigned copies = 1);

/// lambda |psi_00><psi_00| + (1 - lambda) 1/D^2. Called a Werner state
/// throughout; structurally it is the isotropic state.
[[nodiscard]] DensityMatrix werner_state(double lambda, Dim D);

/// The state above is entangled iff lambda > 1 / (1 + D).
[[nodiscard]] double separability_threshold(Dim D);

enum class TwirlKind { FullDft, TruncatedDft, Identity };

using TwirlSchedule = std::vector<TwirlKind>;

[[nodiscard]] TwirlSchedule default_schedule();
[[nodiscard]] UnitaryOp twirl_unitary(TwirlKind kind, Dim D);
[[nodiscard]] std::string to_string(TwirlKind kind);
[[nodiscard]] TwirlKind twirl_kind_from_string(const std::string& name);

/// (U (x) U*) sigma (U (x) U*)^dagger on a two-qudit state.
[[nodiscard]] DensityMatrix twirl(const DensityMatrix& sigma, const UnitaryOp& u);

/// One round: nonlinear_map with N = copies, then the twirl
/// schedule[step_index % schedule.size()].
[[nodiscard]] MapResult purification_step(const DensityMatrix& sigma, std::size_t step_index,
                                          const TwirlSchedule& schedule = default_schedule(),
                                          unsigned copies = 1);

struct PurifyConfig {
    Dim D{2};
    std::size_t qudits_per_block = 2;
    unsigned copies = 1;
    std::variant<double, DensityMatrix> initial = 1.0;
    std::size_t max_iters = 500;
    double fidelity_target = 0.999;
    TwirlSchedule schedule = default_schedule();

    /// Throws InvalidArgument on the first violated constraint.
    void validate() const;
};

struct PurificationStep {
    std::size_t iteration;
    double fidelity;
    double step_success_prob;
    double cumulative_success_prob;
};

/// Row 0 is the initial state (step and cumulative probability 1).
struct PurificationTrace {
    std::vector<PurificationStep> steps;
    bool converged = false;
    std::size_t iterations_used = 0;
    std::optional<std::string> failure_reason;

    [[nodiscard]] double final_fidelity() const { return steps.back().fidelity; }
    [[nodiscard]] double cumulative_success_prob() const { return steps.back().cumulative_success_prob; }
};

/// Iterates purification_step until fidelity with psi_00 reaches the target
/// or max_iters steps were taken. A vanishing success probability ends the
/// run as non-converged with `failure_reason` set.
[[nodiscard]] PurificationTrace run_purification(const PurifyConfig& config);

struct SweepSpec {
    std::vector<int> dims;
    /// Absolute Werner weights, used for every D.
    std::vector<double> lambdas;
    /// Offsets above the threshold: lambda = 1/(1+D) + offset.
    std::vector<double> threshold_offsets;
    /// Drop cells with lambda <= 1/(1+D).
    bool entangled_only = false;
    std::size_t max_iters = 500;
    double fidelity_target = 0.999;
    TwirlSchedule schedule = default_schedule();
    unsigned threads = 1;
};

struct SweepRow {
    int D;
    double lambda;
    bool converged;
    std::size_t iterations_used;
    double cumulative_success_prob;
    double final_fidelity;
};

/// One row per (D, lambda) cell, ordered by D then by lambda as listed
/// (absolute weights first, then threshold offsets). Cells run on up to
/// `threads` workers; the result does not depend on the thread count.
[[nodiscard]] std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace qgxor::purify
