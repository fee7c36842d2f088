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

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "qgxor/ring.hpp"

namespace qgxor {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Absolute tolerance for structural checks (unitarity, hermiticity, trace,
/// eigenvalue floor). Must lie in (0, 1e-6].
class Tolerance {
  public:
    static constexpr double kDefault = 1e-10;

    Tolerance() = default;
    explicit Tolerance(double atol);

    [[nodiscard]] double atol() const noexcept { return atol_; }

  private:
    double atol_ = kDefault;
};

/// Residuals of the three density-matrix conditions. The reusable validity
/// assertion: tests and constructors both go through `check_density_matrix`.
struct DensityCheck {
    double hermitian_residual = 0.0;  // max |rho - rho^dagger|
    double trace_residual = 0.0;      // |tr rho - 1|
    double min_eigenvalue = 0.0;

    [[nodiscard]] bool ok(Tolerance tol = {}) const noexcept;
    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] DensityCheck check_density_matrix(const CMatrix& mat);

/// max-entry |U^dagger U - I|.
[[nodiscard]] double unitarity_residual(const CMatrix& mat);

/// max-entry |A - B|; matrices must have equal shape.
[[nodiscard]] double max_abs_diff(const CMatrix& a, const CMatrix& b);

class DensityMatrix;

/// Normalized amplitude vector over a composite system.
class PureState {
  public:
    PureState(Dims dims, CVector amps, Tolerance tol = {});

    /// Rescales `amps` to unit norm. Throws on a (numerically) zero vector.
    static PureState normalized(Dims dims, CVector amps);
    static PureState basis(Dims dims, const MultiIndex& index);

    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] const CVector& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }

    [[nodiscard]] DensityMatrix projector() const;

  private:
    Dims dims_;
    CVector amps_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix over a composite system.
class DensityMatrix {
  public:
    /// Full validation, including an eigenvalue floor of -atol.
    DensityMatrix(Dims dims, CMatrix mat, Tolerance tol = {});

    /// For results that are valid by construction (Kronecker products, partial
    /// traces, unitary conjugation, Schur powers). Checks shape and trace only,
    /// and symmetrizes away rounding-level anti-Hermitian parts.
    static DensityMatrix from_trusted(Dims dims, CMatrix mat);

    static DensityMatrix maximally_mixed(Dims dims);

    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] const CMatrix& matrix() const noexcept { return mat_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }

  private:
    struct Trusted {};
    DensityMatrix(Trusted, Dims dims, CMatrix mat);

    Dims dims_;
    CMatrix mat_;
};

/// Unitary matrix over a composite system.
class UnitaryOp {
  public:
    UnitaryOp(Dims dims, CMatrix mat, Tolerance tol = {});

    static UnitaryOp identity(Dims dims);

    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] const CMatrix& matrix() const noexcept { return mat_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }

    [[nodiscard]] UnitaryOp adjoint() const;
    /// Entrywise complex conjugate (U*), not the adjoint.
    [[nodiscard]] UnitaryOp conjugate() const;
    [[nodiscard]] UnitaryOp operator*(const UnitaryOp& rhs) const;
    [[nodiscard]] UnitaryOp pow(unsigned exponent) const;

  private:
    Dims dims_;
    CMatrix mat_;
};

}  // namespace qgxor
