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

#include "qgxor/purify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qgxor/errors.hpp"
#include "qgxor/gates.hpp"
#include "qgxor/linalg.hpp"

namespace qgxor::purify {

namespace {

Dim two_qudit_dim(const Dims& dims, const char* what) {
    if (dims.size() != 2 || dims[0] != dims[1]) {
        throw InvalidArgument(std::string(what) + ": expected two qudits of equal dimension");
    }
    return dims[0];
}

void check_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw InvalidArgument("Werner weight lambda must lie in [0, 1]");
    }
}

Eigen::VectorXd eigenvalues_ascending(const CMatrix& mat) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(mat, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double second_largest(const Eigen::VectorXd& ascending) {
    return ascending.size() < 2 ? 0.0 : ascending(ascending.size() - 2);
}

}  // namespace

MapResult nonlinear_map(const DensityMatrix& sigma, unsigned copies) {
    if (copies < 1) throw InvalidArgument("nonlinear_map: need at least one target copy");
    const CMatrix& s = sigma.matrix();
    CMatrix powered = s;
    for (unsigned c = 0; c < copies; ++c) powered = powered.cwiseProduct(s);

    const double p_c = powered.diagonal().real().sum();
    if (!(p_c >= kMinSuccessProbability)) {
        throw VanishingProbability("nonlinear_map: vanishing success probability");
    }
    powered /= p_c;
    return {DensityMatrix::from_trusted(sigma.dims(), std::move(powered)), p_c};
}

MapResult nonlinear_map_oracle(const DensityMatrix& sigma_c, const DensityMatrix& sigma_t,
                               std::size_t qudits_per_block, unsigned copies, GateOrder order) {
    const Dims& block = sigma_c.dims();
    if (qudits_per_block < 1 || block.size() != qudits_per_block) {
        throw InvalidArgument("nonlinear_map_oracle: control must consist of M qudits");
    }
    if (!std::all_of(block.begin(), block.end(), [&](Dim d) { return d == block[0]; })) {
        throw InvalidArgument("nonlinear_map_oracle: all qudits must share one dimension");
    }
    if (sigma_t.dims() != block) {
        throw InvalidArgument("nonlinear_map_oracle: target and control blocks differ");
    }
    if (copies < 1) throw InvalidArgument("nonlinear_map_oracle: need at least one target copy");

    const std::size_t total_qudits = qudits_per_block * (1 + copies);
    std::size_t axis = 1;
    for (std::size_t q = 0; q < total_qudits; ++q) {
        axis *= block[0].size();
        if (axis > kOracleMaxAxis) {
            throw CapacityExceeded("nonlinear_map_oracle: dense construction exceeds " +
                                   std::to_string(kOracleMaxAxis) + " amplitudes per axis");
        }
    }

    DensityMatrix joint = sigma_c;
    for (unsigned i = 0; i < copies; ++i) joint = tensor(joint, sigma_t);

    const UnitaryOp gxor = gates::gxor_unitary(block[0]);
    auto apply_gate = [&](std::size_t control, unsigned target_system) {
        const std::array<std::size_t, 2> targets{control, qudits_per_block * (target_system + 1) + control};
        joint = apply(gxor, joint, targets);
    };
    if (order == GateOrder::ControlMajor) {
        for (std::size_t j = 0; j < qudits_per_block; ++j)
            for (unsigned i = 0; i < copies; ++i) apply_gate(j, i);
    } else {
        for (unsigned i = 0; i < copies; ++i)
            for (std::size_t j = 0; j < qudits_per_block; ++j) apply_gate(j, i);
    }

    double probability = 1.0;
    try {
        for (std::size_t q = total_qudits; q-- > qudits_per_block;) {
            PostSelection selected = post_select(joint, q, Dit(0));
            probability *= selected.probability;
            joint = std::move(selected.state);
        }
    } catch (const ImpossibleOutcome&) {
        throw VanishingProbability("nonlinear_map_oracle: vanishing success probability");
    }
    if (!(probability >= kMinSuccessProbability)) {
        throw VanishingProbability("nonlinear_map_oracle: vanishing success probability");
    }
    return {std::move(joint), probability};
}

bool MapPropertiesReport::non_injective(Tolerance tol) const {
    return witness_output_distance <= tol.atol() && witness_input_distance > tol.atol();
}

bool MapPropertiesReport::maps_pure_to_pure(Tolerance tol) const {
    return !input_pure || output_second_eigenvalue < tol.atol();
}

bool MapPropertiesReport::fixed_points_hold(Tolerance tol) const {
    return std::all_of(fixed_point_residuals.begin(), fixed_point_residuals.end(),
                       [&](double r) { return r <= tol.atol(); });
}

MapPropertiesReport map_properties_check(const DensityMatrix& sigma,
                                         std::span<const DensityMatrix> fixed_points, unsigned copies) {
    MapPropertiesReport report;
    const MapResult image = nonlinear_map(sigma, copies);
    report.output_check = check_density_matrix(image.state.matrix());

    // Flip the sign of the basis state carrying the most off-diagonal weight.
    const CMatrix& s = sigma.matrix();
    double best = -1.0;
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
        const double weight = s.row(r).cwiseAbs().sum() - std::abs(s(r, r));
        if (weight > best) {
            best = weight;
            report.flipped_index = static_cast<std::size_t>(r);
        }
    }
    CMatrix flipped = s;
    const auto f = static_cast<Eigen::Index>(report.flipped_index);
    flipped.row(f) *= -1.0;
    flipped.col(f) *= -1.0;
    const DensityMatrix witness = DensityMatrix::from_trusted(sigma.dims(), flipped);
    report.witness_input_distance = max_abs_diff(s, witness.matrix());
    report.witness_output_distance =
        max_abs_diff(image.state.matrix(), nonlinear_map(witness, copies).state.matrix());

    for (const auto& fp : fixed_points) {
        report.fixed_point_residuals.push_back(
            max_abs_diff(nonlinear_map(fp, copies).state.matrix(), fp.matrix()));
    }

    const Tolerance tol;
    report.input_pure = second_largest(eigenvalues_ascending(s)) < tol.atol();
    report.output_second_eigenvalue = second_largest(eigenvalues_ascending(image.state.matrix()));
    return report;
}

DensityMatrix werner_state(double lambda, Dim D) {
    check_lambda(lambda);
    const CVector psi = gates::bell_state(Dit(0), Dit(0), D).amplitudes();
    const auto n = psi.size();
    CMatrix mat = lambda * (psi * psi.adjoint()) +
                  (1.0 - lambda) * CMatrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix::from_trusted({D, D}, std::move(mat));
}

double separability_threshold(Dim D) { return 1.0 / (1.0 + D.value()); }

TwirlSchedule default_schedule() { return {TwirlKind::FullDft, TwirlKind::TruncatedDft}; }

UnitaryOp twirl_unitary(TwirlKind kind, Dim D) {
    switch (kind) {
        case TwirlKind::FullDft:
            return dft_unitary(D);
        case TwirlKind::TruncatedDft:
            return truncated_dft_unitary(D);
        case TwirlKind::Identity:
            return UnitaryOp::identity({D});
    }
    throw InvalidArgument("unknown twirl kind");
}

std::string to_string(TwirlKind kind) {
    switch (kind) {
        case TwirlKind::FullDft:
            return "full_dft";
        case TwirlKind::TruncatedDft:
            return "truncated_dft";
        case TwirlKind::Identity:
            return "identity";
    }
    return "unknown";
}

TwirlKind twirl_kind_from_string(const std::string& name) {
    for (auto kind : {TwirlKind::FullDft, TwirlKind::TruncatedDft, TwirlKind::Identity}) {
        if (to_string(kind) == name) return kind;
    }
    throw InvalidArgument("unknown twirl kind '" + name + "'");
}

DensityMatrix twirl(const DensityMatrix& sigma, const UnitaryOp& u) {
    const Dim D = two_qudit_dim(sigma.dims(), "twirl");
    if (u.dims() != Dims{D}) throw InvalidArgument("twirl: local unitary dimension mismatch");
    const std::array<std::size_t, 1> alice{0};
    const std::array<std::size_t, 1> bob{1};
    return apply(u.conjugate(), apply(u, sigma, alice), bob);
}

MapResult purification_step(const DensityMatrix& sigma, std::size_t step_index,
                            const TwirlSchedule& schedule, unsigned copies) {
    const Dim D = two_qudit_dim(sigma.dims(), "purification_step");
    if (schedule.empty()) throw InvalidArgument("purification_step: empty twirl schedule");
    MapResult mapped = nonlinear_map(sigma, copies);
    const TwirlKind kind = schedule[step_index % schedule.size()];
    return {twirl(mapped.state, twirl_unitary(kind, D)), mapped.success_probability};
}

void PurifyConfig::validate() const {
    if (qudits_per_block != 2) {
        throw InvalidArgument("purification runs on two-qudit states (M = 2)");
    }
    if (copies < 1) throw InvalidArgument("at least one target copy is required (N >= 1)");
    if (!(fidelity_target > 0.0 && fidelity_target <= 1.0)) {
        throw InvalidArgument("fidelity target must lie in (0, 1]");
    }
    if (schedule.empty()) throw InvalidArgument("twirl schedule is empty");
    if (const auto* lambda = std::get_if<double>(&initial)) {
        check_lambda(*lambda);
    } else if (std::get<DensityMatrix>(initial).dims() != Dims{D, D}) {
        throw InvalidArgument("initial state must be two qudits of dimension D");
    }
}

PurificationTrace run_purification(const PurifyConfig& config) {
    config.validate();
    const Dim D = config.D;
    DensityMatrix sigma = std::holds_alternative<double>(config.initial)
                              ? werner_state(std::get<double>(config.initial), D)
                              : std::get<DensityMatrix>(config.initial);
    const PureState target = gates::bell_state(Dit(0), Dit(0), D);

    PurificationTrace trace;
    double fid = fidelity(target, sigma);
    double cumulative = 1.0;
    trace.steps.push_back({0, fid, 1.0, 1.0});
    trace.converged = fid >= config.fidelity_target;

    for (std::size_t it = 0; !trace.converged && it < config.max_iters; ++it) {
        std::optional<MapResult> next;
        try {
            next = purification_step(sigma, it, config.schedule, config.copies);
        } catch (const VanishingProbability& e) {
            trace.failure_reason = e.what();
            break;
        }
        sigma = std::move(next->state);
        cumulative *= next->success_probability;
        fid = fidelity(target, sigma);
        trace.steps.push_back({it + 1, fid, next->success_probability, cumulative});
        trace.iterations_used = it + 1;
        trace.converged = fid >= config.fidelity_target;
    }
    return trace;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.dims.empty()) throw InvalidArgument("sweep: dimension range is empty");
    if (spec.lambdas.empty() && spec.threshold_offsets.empty()) {
        throw InvalidArgument("sweep: lambda grid is empty");
    }

    struct Cell {
        Dim D;
        double lambda;
    };
    std::vector<Cell> cells;
    for (int d : spec.dims) {
        const Dim D(d);
        const double threshold = separability_threshold(D);
        std::vector<double> grid = spec.lambdas;
        for (double offset : spec.threshold_offsets) grid.push_back(threshold + offset);
        for (double lambda : grid) {
            check_lambda(lambda);
            if (spec.entangled_only && !(lambda > threshold)) continue;
            cells.push_back({D, lambda});
        }
    }
    if (cells.empty()) {
        throw InvalidArgument("sweep: no (D, lambda) cell lies in the entangled region");
    }

    PurifyConfig base;
    base.max_iters = spec.max_iters;
    base.fidelity_target = spec.fidelity_target;
    base.schedule = spec.schedule;
    base.validate();

    std::vector<std::optional<SweepRow>> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < cells.size(); idx = next++) {
            try {
                PurifyConfig config = base;
                config.D = cells[idx].D;
                config.initial = cells[idx].lambda;
                const PurificationTrace trace = run_purification(config);
                rows[idx] = SweepRow{cells[idx].D.value(), cells[idx].lambda, trace.converged,
                                     trace.iterations_used, trace.cumulative_success_prob(),
                                     trace.final_fidelity()};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(spec.threads, 1, cells.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRow> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.push_back(*row);
    return out;
}

}  // namespace qgxor::purify
