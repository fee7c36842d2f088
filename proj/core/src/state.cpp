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

#include "qgxor/state.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qgxor/errors.hpp"

namespace qgxor {

namespace {

void check_square(const Dims& dims, Eigen::Index rows, Eigen::Index cols, const char* what) {
    const auto n = static_cast<Eigen::Index>(total_size(dims));
    if (dims.empty() || rows != n || cols != n) {
        std::ostringstream msg;
        msg << what << ": matrix is " << rows << "x" << cols << " but subsystem dimensions give "
            << n;
        throw InvalidArgument(msg.str());
    }
}

}  // namespace

Tolerance::Tolerance(double atol) : atol_(atol) {
    if (!(atol > 0.0 && atol <= 1e-6)) {
        throw InvalidArgument("tolerance must lie in (0, 1e-6]");
    }
}

bool DensityCheck::ok(Tolerance tol) const noexcept {
    return hermitian_residual <= tol.atol() && trace_residual <= tol.atol() &&
           min_eigenvalue >= -tol.atol();
}

std::string DensityCheck::describe() const {
    std::ostringstream out;
    out << "hermitian residual " << hermitian_residual << ", trace residual " << trace_residual
        << ", min eigenvalue " << min_eigenvalue;
    return out.str();
}

DensityCheck check_density_matrix(const CMatrix& mat) {
    DensityCheck check;
    if (mat.rows() != mat.cols() || mat.rows() == 0) {
        check.hermitian_residual = INFINITY;
        check.trace_residual = INFINITY;
        check.min_eigenvalue = -INFINITY;
        return check;
    }
    check.hermitian_residual = max_abs_diff(mat, mat.adjoint());
    check.trace_residual = std::abs(mat.trace() - Complex(1.0, 0.0));
    const CMatrix herm = 0.5 * (mat + mat.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = solver.eigenvalues().minCoeff();
    return check;
}

double unitarity_residual(const CMatrix& mat) {
    if (mat.rows() != mat.cols()) return INFINITY;
    const CMatrix gram = mat.adjoint() * mat;
    return max_abs_diff(gram, CMatrix::Identity(mat.rows(), mat.cols()));
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

// --- PureState ---

PureState::PureState(Dims dims, CVector amps, Tolerance tol)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
    if (dims_.empty() || static_cast<std::size_t>(amps_.size()) != total_size(dims_)) {
        throw InvalidArgument("pure state: amplitude count does not match subsystem dimensions");
    }
    const double norm = amps_.norm();
    if (std::abs(norm - 1.0) > tol.atol()) {
        std::ostringstream msg;
        msg << "pure state: norm " << norm << " is not 1";
        throw InvalidArgument(msg.str());
    }
}

PureState PureState::normalized(Dims dims, CVector amps) {
    const double norm = amps.norm();
    if (!(norm > 1e-300) || !std::isfinite(norm)) {
        throw InvalidArgument("pure state: cannot normalize a zero vector");
    }
    amps /= norm;
    return PureState(std::move(dims), std::move(amps));
}

PureState PureState::basis(Dims dims, const MultiIndex& index) {
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(total_size(dims)));
    amps(static_cast<Eigen::Index>(flatten(dims, index))) = 1.0;
    return PureState(std::move(dims), std::move(amps));
}

DensityMatrix PureState::projector() const {
    return DensityMatrix::from_trusted(dims_, amps_ * amps_.adjoint());
}

// --- DensityMatrix ---

DensityMatrix::DensityMatrix(Dims dims, CMatrix mat, Tolerance tol)
    : dims_(std::move(dims)), mat_(std::move(mat)) {
    check_square(dims_, mat_.rows(), mat_.cols(), "density matrix");
    const DensityCheck check = check_density_matrix(mat_);
    if (!check.ok(tol)) {
        throw InvalidArgument("not a valid density matrix: " + check.describe());
    }
}

DensityMatrix::DensityMatrix(Trusted, Dims dims, CMatrix mat)
    : dims_(std::move(dims)), mat_(std::move(mat)) {}

DensityMatrix DensityMatrix::from_trusted(Dims dims, CMatrix mat) {
    check_square(dims, mat.rows(), mat.cols(), "density matrix");
    const double trace_residual = std::abs(mat.trace() - Complex(1.0, 0.0));
    if (!(trace_residual <= 1e-8)) {
        std::ostringstream msg;
        msg << "density matrix: trace deviates from 1 by " << trace_residual;
        throw InvalidArgument(msg.str());
    }
    CMatrix herm = 0.5 * (mat + mat.adjoint());
    return DensityMatrix(Trusted{}, std::move(dims), std::move(herm));
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
    const auto n = static_cast<Eigen::Index>(total_size(dims));
    return from_trusted(std::move(dims), CMatrix::Identity(n, n) / static_cast<double>(n));
}

// --- UnitaryOp ---

UnitaryOp::UnitaryOp(Dims dims, CMatrix mat, Tolerance tol)
    : dims_(std::move(dims)), mat_(std::move(mat)) {
    check_square(dims_, mat_.rows(), mat_.cols(), "unitary");
    const double residual = unitarity_residual(mat_);
    if (!(residual <= tol.atol())) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max |U^dagger U - I| = " << residual;
        throw InvalidArgument(msg.str());
    }
}

UnitaryOp UnitaryOp::identity(Dims dims) {
    const auto n = static_cast<Eigen::Index>(total_size(dims));
    return UnitaryOp(std::move(dims), CMatrix::Identity(n, n));
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(dims_, mat_.adjoint()); }

UnitaryOp UnitaryOp::conjugate() const { return UnitaryOp(dims_, mat_.conjugate()); }

UnitaryOp UnitaryOp::operator*(const UnitaryOp& rhs) const {
    if (dims_ != rhs.dims_) throw InvalidArgument("unitary product: dimension mismatch");
    return UnitaryOp(dims_, mat_ * rhs.mat_);
}

UnitaryOp UnitaryOp::pow(unsigned exponent) const {
    CMatrix acc = CMatrix::Identity(mat_.rows(), mat_.cols());
    CMatrix base = mat_;
    while (exponent > 0) {
        if (exponent & 1U) acc = acc * base;
        base = base * base;
        exponent >>= 1U;
    }
    return UnitaryOp(dims_, std::move(acc));
}

}  // namespace qgxor
