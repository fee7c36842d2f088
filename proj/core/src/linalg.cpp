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

#include "qgxor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "qgxor/errors.hpp"

namespace qgxor {

namespace {

constexpr double kImpossibleOutcomeFloor = 1e-15;

Dims concat(const Dims& a, const Dims& b) {
    Dims out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_targets(const Dims& dims, const Dims& op_dims, std::span<const std::size_t> targets) {
    if (targets.size() != op_dims.size()) {
        throw InvalidArgument("apply: operator has " + std::to_string(op_dims.size()) +
                              " subsystems but " + std::to_string(targets.size()) +
                              " targets were given");
    }
    std::vector<bool> seen(dims.size(), false);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const std::size_t t = targets[k];
        if (t >= dims.size() || seen[t]) {
            throw InvalidArgument("apply: invalid or repeated target subsystem " + std::to_string(t));
        }
        seen[t] = true;
        if (dims[t] != op_dims[k]) {
            throw InvalidArgument("apply: dimension mismatch on subsystem " + std::to_string(t));
        }
    }
}

std::vector<std::size_t> all_subsystems(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = k;
    return out;
}

}  // namespace

namespace kernels {

SubsystemSplit split_subsystems(const Dims& dims, std::span<const std::size_t> targets) {
    const auto stride = strides(dims);
    std::vector<bool> is_target(dims.size(), false);
    for (auto t : targets) is_target.at(t) = true;

    // Enumerate offsets of a list of subsystems in row-major order over that list.
    auto offsets_of = [&](const std::vector<std::size_t>& subs) {
        std::vector<std::size_t> out{0};
        for (auto s : subs) {
            std::vector<std::size_t> next;
            next.reserve(out.size() * dims[s].size());
            for (auto base : out) {
                for (std::size_t d = 0; d < dims[s].size(); ++d) next.push_back(base + d * stride[s]);
            }
            out = std::move(next);
        }
        return out;
    };

    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (!is_target[k]) rest.push_back(k);
    }
    return {offsets_of({targets.begin(), targets.end()}), offsets_of(rest)};
}

void apply_left(const CMatrix& op, const SubsystemSplit& split, CMatrix& m) {
    const auto dt = static_cast<Eigen::Index>(split.target_offsets.size());
    CMatrix block(dt, m.cols());
    for (auto base : split.rest_offsets) {
        for (Eigen::Index k = 0; k < dt; ++k) {
            block.row(k) = m.row(static_cast<Eigen::Index>(base + split.target_offsets[k]));
        }
        const CMatrix image = op * block;
        for (Eigen::Index k = 0; k < dt; ++k) {
            m.row(static_cast<Eigen::Index>(base + split.target_offsets[k])) = image.row(k);
        }
    }
}

void apply_right_adjoint(const CMatrix& op, const SubsystemSplit& split, CMatrix& m) {
    const auto dt = static_cast<Eigen::Index>(split.target_offsets.size());
    const CMatrix op_adj = op.adjoint();
    CMatrix block(m.rows(), dt);
    for (auto base : split.rest_offsets) {
        for (Eigen::Index k = 0; k < dt; ++k) {
            block.col(k) = m.col(static_cast<Eigen::Index>(base + split.target_offsets[k]));
        }
        const CMatrix image = block * op_adj;
        for (Eigen::Index k = 0; k < dt; ++k) {
            m.col(static_cast<Eigen::Index>(base + split.target_offsets[k])) = image.col(k);
        }
    }
}

}  // namespace kernels

PureState tensor(const PureState& a, const PureState& b) {
    CVector amps = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
    return PureState(concat(a.dims(), b.dims()), std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    CMatrix mat = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
    return DensityMatrix::from_trusted(concat(a.dims(), b.dims()), std::move(mat));
}

UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b) {
    CMatrix mat = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
    return UnitaryOp(concat(a.dims(), b.dims()), std::move(mat));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    const Dims& dims = rho.dims();
    if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.back() >= dims.size()) {
        throw InvalidArgument("partial_trace: invalid or repeated subsystem index");
    }
    const auto split = kernels::split_subsystems(dims, kept);
    Dims kept_dims;
    for (auto k : kept) kept_dims.push_back(dims[k]);

    const auto n = static_cast<Eigen::Index>(split.target_offsets.size());
    const CMatrix& m = rho.matrix();
    CMatrix out = CMatrix::Zero(n, n);
    for (auto traced : split.rest_offsets) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto col = static_cast<Eigen::Index>(traced + split.target_offsets[c]);
            for (Eigen::Index r = 0; r < n; ++r) {
                out(r, c) += m(static_cast<Eigen::Index>(traced + split.target_offsets[r]), col);
            }
        }
    }
    return DensityMatrix::from_trusted(std::move(kept_dims), std::move(out));
}

PostSelection post_select(const DensityMatrix& rho, std::size_t subsystem, Dit ket) {
    const Dims& dims = rho.dims();
    if (subsystem >= dims.size()) {
        throw InvalidArgument("post_select: subsystem index " + std::to_string(subsystem) +
                              " out of range");
    }
    if (dims.size() < 2) {
        throw InvalidArgument("post_select: no subsystem would remain");
    }
    check_dit(ket, dims[subsystem]);

    const std::size_t fixed = static_cast<std::size_t>(ket.value()) * strides(dims)[subsystem];
    std::vector<std::size_t> remaining;
    Dims remaining_dims;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k != subsystem) {
            remaining.push_back(k);
            remaining_dims.push_back(dims[k]);
        }
    }
    const auto split = kernels::split_subsystems(dims, remaining);
    const auto n = static_cast<Eigen::Index>(split.target_offsets.size());
    const CMatrix& m = rho.matrix();
    CMatrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const auto col = static_cast<Eigen::Index>(fixed + split.target_offsets[c]);
        for (Eigen::Index r = 0; r < n; ++r) {
            out(r, c) = m(static_cast<Eigen::Index>(fixed + split.target_offsets[r]), col);
        }
    }
    const double probability = out.trace().real();
    if (!(probability >= kImpossibleOutcomeFloor)) {
        throw ImpossibleOutcome("post_select: outcome |" + std::to_string(ket.value()) +
                                "> on subsystem " + std::to_string(subsystem) +
                                " has zero probability");
    }
    out /= probability;
    return {DensityMatrix::from_trusted(std::move(remaining_dims), std::move(out)), probability};
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dims() != rho.dims()) throw InvalidArgument("fidelity: dimension mismatch");
    const CVector& v = psi.amplitudes();
    return v.dot(rho.matrix() * v).real();
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.dims() != b.dims()) throw InvalidArgument("inner_product: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

bool equal_up_to_phase(const PureState& a, const PureState& b, Tolerance tol) {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tol.atol();
}

PureState apply(const UnitaryOp& op, const PureState& psi, std::span<const std::size_t> targets) {
    check_targets(psi.dims(), op.dims(), targets);
    CMatrix m = psi.amplitudes();
    kernels::apply_left(op.matrix(), kernels::split_subsystems(psi.dims(), targets), m);
    return PureState::normalized(psi.dims(), m.col(0));
}

DensityMatrix apply(const UnitaryOp& op, const DensityMatrix& rho, std::span<const std::size_t> targets) {
    check_targets(rho.dims(), op.dims(), targets);
    const auto split = kernels::split_subsystems(rho.dims(), targets);
    CMatrix m = rho.matrix();
    kernels::apply_left(op.matrix(), split, m);
    kernels::apply_right_adjoint(op.matrix(), split, m);
    return DensityMatrix::from_trusted(rho.dims(), std::move(m));
}

PureState apply(const UnitaryOp& op, const PureState& psi) {
    const auto all = all_subsystems(psi.num_subsystems());
    return apply(op, psi, all);
}

DensityMatrix apply(const UnitaryOp& op, const DensityMatrix& rho) {
    const auto all = all_subsystems(rho.num_subsystems());
    return apply(op, rho, all);
}

UnitaryOp dft_unitary(Dim D) {
    const auto n = static_cast<Eigen::Index>(D.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix f(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            // Reduce l*k mod D before forming the angle so large D keeps exact phases.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((l * k) % n) /
                                 static_cast<double>(n);
            f(k, l) = std::polar(scale, angle);
        }
    }
    return UnitaryOp({D}, std::move(f));
}

UnitaryOp truncated_dft_unitary(Dim D) {
    const auto n = static_cast<Eigen::Index>(D.size());
    CMatrix u = CMatrix::Identity(n, n);
    const Eigen::Index m = n - 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index l = 0; l < m; ++l) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((l * k) % m) /
                                 static_cast<double>(m);
            u(k, l) = std::polar(scale, angle);
        }
    }
    return UnitaryOp({D}, std::move(u));
}

}  // namespace qgxor
