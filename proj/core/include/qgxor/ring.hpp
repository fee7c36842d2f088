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

#include <compare>
#include <cstddef>
#include <vector>

namespace qgxor {

/// Dimension of a single qudit, D >= 2.
class Dim {
  public:
    explicit Dim(int d);

    [[nodiscard]] int value() const noexcept { return value_; }
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(value_); }

    friend auto operator<=>(const Dim&, const Dim&) = default;

  private:
    int value_;
};

/// A basis label of a qudit. Non-negative on construction; the upper bound
/// depends on the qudit it is used with and is checked by `check_dit`.
class Dit {
  public:
    explicit Dit(int v);

    [[nodiscard]] int value() const noexcept { return value_; }

    friend auto operator<=>(const Dit&, const Dit&) = default;

  private:
    int value_;
};

using Dims = std::vector<Dim>;

/// One digit per subsystem, first subsystem most significant.
struct MultiIndex {
    std::vector<int> digits;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Throws InvalidArgument unless 0 <= d < D.
void check_dit(Dit d, Dim D);

/// Canonical representative of (i - j) mod D in [0, D).
[[nodiscard]] Dit mod_sub(Dit i, Dit j, Dim D);

/// Canonical representative of (i + j) mod D in [0, D).
[[nodiscard]] Dit mod_add(Dit i, Dit j, Dim D);

/// Reduces any integer to [0, D).
[[nodiscard]] int residue(long long value, Dim D) noexcept;

[[nodiscard]] std::size_t total_size(const Dims& dims) noexcept;

/// Row-major strides: stride of the last subsystem is 1.
[[nodiscard]] std::vector<std::size_t> strides(const Dims& dims);

[[nodiscard]] std::size_t flatten(const Dims& dims, const MultiIndex& index);
[[nodiscard]] MultiIndex unflatten(const Dims& dims, std::size_t flat);

/// `count` copies of a qudit of dimension D.
[[nodiscard]] Dims uniform_dims(Dim D, std::size_t count);

}  // namespace qgxor
