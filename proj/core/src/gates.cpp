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

#include "qgxor/gates.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "qgxor/errors.hpp"
#include "qgxor/linalg.hpp"

namespace qgxor::gates {

namespace {

using Perm = int (*)(int, int, int);

UnitaryOp controlled_permutation(Dim D, Perm target_of) {
    const int d = D.value();
    const auto n = static_cast<Eigen::Index>(d) * d;
    CMatrix u = CMatrix::Zero(n, n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            u(i * d + target_of(i, j, d), i * d + j) = 1.0;
        }
    }
    return UnitaryOp({D, D}, std::move(u));
}

void check_bell_input(const Dims& dims) {
    if (dims.size() != 2 || dims[0] != dims[1]) {
        throw InvalidArgument("bell_measurement: input must be two qudits of equal dimension");
    }
}

BellDistribution distribution_from(Dim D, const Eigen::VectorXd& probabilities) {
    BellDistribution out{D, {}};
    const int d = D.value();
    out.outcomes.reserve(static_cast<std::size_t>(d) * d);
    for (int l = 0; l < d; ++l) {
        for (int m = 0; m < d; ++m) {
            out.outcomes.push_back(
                {BellLabel{Dit(l), Dit(m)}, probabilities(l * d + m), MultiIndex{{l, m}}});
        }
    }
    return out;
}

// Fixed two-qudit gates are rebuilt (and re-validated) often in protocol
// loops; keep one copy per dimension.
template <typename Build>
UnitaryOp memoized(std::map<int, UnitaryOp>& cache, std::mutex& mutex, Dim D, Build build) {
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(D.value()); it != cache.end()) return it->second;
    }
    UnitaryOp built = build();
    std::lock_guard lock(mutex);
    return cache.try_emplace(D.value(), std::move(built)).first->second;
}

}  // namespace

UnitaryOp gxor_unitary(Dim D) {
    static std::map<int, UnitaryOp> cache;
    static std::mutex mutex;
    return memoized(cache, mutex, D, [D] {
        return controlled_permutation(D, [](int i, int j, int d) { return ((i - j) % d + d) % d; });
    });
}

UnitaryOp gxor_add_unitary(Dim D) {
    return controlled_permutation(D, [](int i, int j, int d) { return (i + j) % d; });
}

PureState bell_state(Dit l, Dit m, Dim D) {
    check_dit(l, D);
    check_dit(m, D);
    const PureState product =
        PureState::basis({D, D}, MultiIndex{{l.value(), m.value()}});
    const std::array<std::size_t, 1> first{0};
    return apply(gxor_unitary(D), apply(dft_unitary(D), product, first));
}

PureState bell_state(BellLabel label, Dim D) { return bell_state(label.l, label.m, D); }

UnitaryOp bell_disentangler(Dim D) {
    static std::map<int, UnitaryOp> cache;
    static std::mutex mutex;
    return memoized(cache, mutex, D, [D] {
        return tensor(dft_unitary(D).adjoint(), UnitaryOp::identity({D})) * gxor_unitary(D);
    });
}

double BellDistribution::probability(BellLabel label) const {
    check_dit(label.l, D);
    check_dit(label.m, D);
    return outcomes[static_cast<std::size_t>(label.l.value() * D.value() + label.m.value())]
        .probability;
}

double BellDistribution::total() const {
    double sum = 0.0;
    for (const auto& o : outcomes) sum += o.probability;
    return sum;
}

BellDistribution bell_measurement(const PureState& state) {
    check_bell_input(state.dims());
    const Dim D = state.dims()[0];
    const PureState disentangled = apply(bell_disentangler(D), state);
    return distribution_from(D, disentangled.amplitudes().cwiseAbs2());
}

BellDistribution bell_measurement(const DensityMatrix& state) {
    check_bell_input(state.dims());
    const Dim D = state.dims()[0];
    const DensityMatrix disentangled = apply(bell_disentangler(D), state);
    Eigen::VectorXd diag = disentangled.matrix().diagonal().real();
    return distribution_from(D, diag.cwiseMax(0.0));
}

UnitaryOp correction_unitary(Dit l, Dit m, Dit j, Dit k, Dim D) {
    for (Dit label : {l, m, j, k}) check_dit(label, D);
    const int d = D.value();
    CMatrix u = CMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        const Dit shifted = mod_sub(mod_sub(Dit(n), k, D), m, D);
        const int exponent = residue(static_cast<long long>(n) * (l.value() - j.value()), D);
        const double angle = -2.0 * std::numbers::pi * exponent / d;
        u(shifted.value(), n) = std::polar(1.0, angle);
    }
    return UnitaryOp({D}, std::move(u));
}

KerrParams::KerrParams(Dim D, double chi) : dim_(D), chi_(chi) {
    if (!(chi > 0.0) || !std::isfinite(chi)) {
        throw InvalidArgument("Kerr susceptibility must be real and positive");
    }
}

double KerrParams::interaction_time() const noexcept {
    return 2.0 * std::numbers::pi / (dim_.value() * chi_);
}

double KerrParams::phase_per_step() const noexcept { return chi_ * interaction_time(); }

CMatrix kerr_gxor_images(const KerrParams& params) {
    const Dim D = params.dim();
    const int d = D.value();
    const auto n = static_cast<Eigen::Index>(d) * d;
    const CMatrix f = dft_unitary(D).matrix();
    const double phase = params.phase_per_step();

    CMatrix images(n, n);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            // Fock coordinates of |i>_1 (F|k>)_2.
            CVector fock = CVector::Zero(n);
            for (int q = 0; q < d; ++q) fock(i * d + q) = f(q, k);
            // Kerr evolution exp(-i chi t n1 n2) is diagonal in the Fock basis.
            for (int p = 0; p < d; ++p) {
                for (int q = 0; q < d; ++q) {
                    fock(p * d + q) *= std::polar(1.0, -phase * p * q);
                }
            }
            // Phase conjugation acts on the Fock coordinates.
            fock = fock.conjugate().eval();
            // Back to mixed labels: <p| (x) <F q'| applied coordinate-wise.
            CVector mixed(n);
            for (int p = 0; p < d; ++p) {
                mixed.segment(p * d, d) = f.adjoint() * fock.segment(p * d, d);
            }
            images.col(i * d + k) = mixed;
        }
    }
    return images;
}

CMatrix kerr_gxor_images(Dim D) { return kerr_gxor_images(KerrParams(D)); }

double kerr_gxor_residual(Dim D) {
    return max_abs_diff(kerr_gxor_images(D), gxor_unitary(D).matrix());
}

}  // namespace qgxor::gates
