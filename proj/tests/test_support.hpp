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

// Shared assertions and brute-force oracles for the test suites. The oracles
// here are written from the defining formulas with plain loops and do not
// call into the library code paths they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qgxor/state.hpp"

namespace qgxor::testing {

/// The reusable density-matrix validity assertion.
inline ::testing::AssertionResult IsValidDensity(const CMatrix& mat, double atol = 1e-10) {
    const DensityCheck check = check_density_matrix(mat);
    if (check.ok(Tolerance(atol))) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "invalid density matrix: " << check.describe();
}

inline ::testing::AssertionResult IsValidDensity(const DensityMatrix& rho, double atol = 1e-10) {
    return IsValidDensity(rho.matrix(), atol);
}

inline Complex root_of_unity(long long numerator, int d) {
    const long long r = ((numerator % d) + d) % d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

/// (1/sqrt D) sum_k exp(i 2 pi l k / D) |k>|k - m mod D>, by direct summation.
inline CVector bell_formula(int l, int m, int d) {
    CVector v = CVector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        v(k * d + ((k - m) % d + d) % d) += root_of_unity(static_cast<long long>(l) * k, d) / std::sqrt(d);
    }
    return v;
}

/// Partial trace by explicit multi-index enumeration.
inline CMatrix brute_partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                                   const std::vector<bool>& keep) {
    const int n = static_cast<int>(rho.rows());
    auto digits = [&](int flat) {
        std::vector<int> out(dims.size());
        for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
            out[s] = flat % dims[s];
            flat /= dims[s];
        }
        return out;
    };
    auto reduced_index = [&](const std::vector<int>& dg) {
        int idx = 0;
        for (std::size_t s = 0; s < dims.size(); ++s)
            if (keep[s]) idx = idx * dims[s] + dg[s];
        return idx;
    };
    int kept = 1;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (keep[s]) kept *= dims[s];
    CMatrix out = CMatrix::Zero(kept, kept);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const auto dr = digits(r);
            const auto dc = digits(c);
            bool traced_equal = true;
            for (std::size_t s = 0; s < dims.size(); ++s)
                if (!keep[s] && dr[s] != dc[s]) traced_equal = false;
            if (traced_equal) out(reduced_index(dr), reduced_index(dc)) += rho(r, c);
        }
    }
    return out;
}

}  // namespace qgxor::testing
