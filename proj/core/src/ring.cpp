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

#include "qgxor/ring.hpp"

#include <string>

#include "qgxor/errors.hpp"

namespace qgxor {

Dim::Dim(int d) : value_(d) {
    if (d < 2) {
        throw InvalidArgument("qudit dimension must be >= 2, got " + std::to_string(d));
    }
}

Dit::Dit(int v) : value_(v) {
    if (v < 0) {
        throw InvalidArgument("basis label must be non-negative, got " + std::to_string(v));
    }
}

void check_dit(Dit d, Dim D) {
    if (d.value() >= D.value()) {
        throw InvalidArgument("basis label " + std::to_string(d.value()) + " out of range for D=" +
                              std::to_string(D.value()));
    }
}

int residue(long long value, Dim D) noexcept {
    const long long m = D.value();
    long long r = value % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

Dit mod_sub(Dit i, Dit j, Dim D) {
    check_dit(i, D);
    check_dit(j, D);
    return Dit(residue(static_cast<long long>(i.value()) - j.value(), D));
}

Dit mod_add(Dit i, Dit j, Dim D) {
    check_dit(i, D);
    check_dit(j, D);
    return Dit(residue(static_cast<long long>(i.value()) + j.value(), D));
}

std::size_t total_size(const Dims& dims) noexcept {
    std::size_t n = 1;
    for (const auto& d : dims) n *= d.size();
    return n;
}

std::vector<std::size_t> strides(const Dims& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k].size();
    return s;
}

std::size_t flatten(const Dims& dims, const MultiIndex& index) {
    if (index.digits.size() != dims.size()) {
        throw InvalidArgument("multi-index has " + std::to_string(index.digits.size()) +
                              " digits for " + std::to_string(dims.size()) + " subsystems");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const int digit = index.digits[k];
        if (digit < 0 || digit >= dims[k].value()) {
            throw InvalidArgument("digit " + std::to_string(digit) + " out of range for subsystem " +
                                  std::to_string(k));
        }
        flat = flat * dims[k].size() + static_cast<std::size_t>(digit);
    }
    return flat;
}

MultiIndex unflatten(const Dims& dims, std::size_t flat) {
    if (flat >= total_size(dims)) {
        throw InvalidArgument("flat index " + std::to_string(flat) + " out of range");
    }
    MultiIndex out{std::vector<int>(dims.size(), 0)};
    for (std::size_t k = dims.size(); k-- > 0;) {
        out.digits[k] = static_cast<int>(flat % dims[k].size());
        flat /= dims[k].size();
    }
    return out;
}

Dims uniform_dims(Dim D, std::size_t count) { return Dims(count, D); }

}  // namespace qgxor
