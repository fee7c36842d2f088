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

#include "qgxor/teleport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qgxor/errors.hpp"
#include "qgxor/linalg.hpp"

namespace qgxor::teleport {

namespace {

void check_input(const PureState& chi) {
    if (chi.num_subsystems() != 1) {
        throw InvalidArgument("teleport: the input must be a single qudit");
    }
}

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_label(Rng& rng, int d) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(d));
}

struct AliceResult {
    CVector amplitudes;  // after disentangling qudits (0, 1); index (l*D + m)*D + n
    std::vector<double> probabilities;
};

AliceResult alice_measures(const PureState& chi, Dit j, Dit k) {
    const Dim D = chi.dims()[0];
    const PureState joint = tensor(chi, gates::bell_state(j, k, D));
    const std::array<std::size_t, 2> alice{0, 1};
    const PureState rotated = apply(gates::bell_disentangler(D), joint, alice);

    const int d = D.value();
    AliceResult out{rotated.amplitudes(), std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    for (int lm = 0; lm < d * d; ++lm) {
        out.probabilities[lm] = out.amplitudes.segment(lm * d, d).squaredNorm();
    }
    return out;
}

TeleportRecord finish(const PureState& chi, Dit j, Dit k, const AliceResult& alice, BellLabel outcome) {
    const Dim D = chi.dims()[0];
    const int d = D.value();
    const int lm = outcome.l.value() * d + outcome.m.value();
    const double probability = alice.probabilities[lm];
    if (!(probability > 1e-15)) {
        throw ImpossibleOutcome("teleport: forced outcome has zero probability");
    }
    PureState pre = PureState::normalized({D}, alice.amplitudes.segment(lm * d, d));
    const UnitaryOp correction = gates::correction_unitary(outcome.l, outcome.m, j, k, D).adjoint();
    PureState post = apply(correction, pre);
    const double fid = std::norm(inner_product(chi, post));
    return {outcome, probability, std::move(pre), std::move(post), fid, classical_bits(D)};
}

}  // namespace

double classical_bits(Dim D) { return 2.0 * std::log2(static_cast<double>(D.value())); }

double verify_teleport_identity(const PureState& chi, Dit j, Dit k) {
    check_input(chi);
    const Dim D = chi.dims()[0];
    const int d = D.value();
    const CVector lhs = tensor(chi, gates::bell_state(j, k, D)).amplitudes();

    CVector rhs = CVector::Zero(lhs.size());
    for (int l = 0; l < d; ++l) {
        for (int m = 0; m < d; ++m) {
            const Complex weight =
                std::polar(1.0 / d, -2.0 * std::numbers::pi * residue(static_cast<long long>(j.value()) * m, D) / d);
            const CVector bob = gates::correction_unitary(Dit(l), Dit(m), j, k, D).matrix() *
                                chi.amplitudes();
            const CVector pair = gates::bell_state(Dit(l), Dit(m), D).amplitudes();
            rhs += weight * CVector(Eigen::kroneckerProduct(pair, bob));
        }
    }
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

TeleportRecord teleport(const PureState& chi, Dit j, Dit k, BellLabel outcome) {
    check_input(chi);
    const Dim D = chi.dims()[0];
    check_dit(outcome.l, D);
    check_dit(outcome.m, D);
    return finish(chi, j, k, alice_measures(chi, j, k), outcome);
}

TeleportRecord teleport(const PureState& chi, Dit j, Dit k, Rng& rng) {
    check_input(chi);
    const Dim D = chi.dims()[0];
    check_dit(j, D);
    check_dit(k, D);
    const AliceResult alice = alice_measures(chi, j, k);

    const double u = uniform01(rng);
    double cumulative = 0.0;
    std::size_t chosen = alice.probabilities.size() - 1;
    for (std::size_t idx = 0; idx < alice.probabilities.size(); ++idx) {
        cumulative += alice.probabilities[idx];
        if (u < cumulative) {
            chosen = idx;
            break;
        }
    }
    const int d = D.value();
    const BellLabel outcome{Dit(static_cast<int>(chosen) / d), Dit(static_cast<int>(chosen) % d)};
    return finish(chi, j, k, alice, outcome);
}

TeleportSummary teleport_demo(Dim D, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw InvalidArgument("teleport_demo: trials must be >= 1");
    const int d = D.value();
    const std::size_t cells = static_cast<std::size_t>(d) * d;

    TeleportSummary summary{d, seed, classical_bits(D), std::numeric_limits<double>::infinity(), 0.0, 0.0,
                            std::vector<std::size_t>(cells, 0), 0.0, {}};
    summary.trials.reserve(trials);
    double fidelity_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const PureState chi = random_pure_state({D}, rng);
        const int j = uniform_label(rng, d);
        const int k = uniform_label(rng, d);
        TeleportRecord record = teleport(chi, Dit(j), Dit(k), rng);

        summary.min_fidelity = std::min(summary.min_fidelity, record.fidelity_with_input);
        fidelity_sum += record.fidelity_with_input;
        summary.max_probability_deviation =
            std::max(summary.max_probability_deviation,
                     std::abs(record.probability - 1.0 / static_cast<double>(cells)));
        ++summary.outcome_counts[static_cast<std::size_t>(record.outcome.l.value() * d +
                                                          record.outcome.m.value())];
        summary.trials.push_back({t, j, k, std::move(record)});
    }
    summary.mean_fidelity = fidelity_sum / static_cast<double>(trials);

    const double expected = static_cast<double>(trials) / static_cast<double>(cells);
    for (auto count : summary.outcome_counts) {
        const double diff = static_cast<double>(count) - expected;
        summary.chi_square += diff * diff / expected;
    }
    return summary;
}

}  // namespace qgxor::teleport
