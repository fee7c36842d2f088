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

#include "qgxor/random.hpp"

namespace qgxor {

namespace {

CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(rows, cols);
    // Column-major fill order keeps the stream layout independent of Eigen internals.
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

PureState random_pure_state(const Dims& dims, Rng& rng) {
    const auto n = static_cast<Eigen::Index>(total_size(dims));
    CVector v = gaussian(n, 1, rng).col(0);
    return PureState::normalized(dims, std::move(v));
}

DensityMatrix random_density_matrix(const Dims& dims, Rng& rng, std::size_t rank) {
    const auto n = static_cast<Eigen::Index>(total_size(dims));
    const auto r = rank == 0 ? n : static_cast<Eigen::Index>(rank);
    const CMatrix g = gaussian(n, r, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::from_trusted(dims, std::move(rho));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    // splitmix64 finalizer over a combined key
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qgxor
