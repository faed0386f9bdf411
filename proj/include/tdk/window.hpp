#pragma once

#include <Eigen/Dense>
#include <string>

#include "tdk/types.hpp"

namespace tdk {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Exactness { closed_form, truncated };

/// An N x N snapshot of an infinite operator in the f-basis.  Immutable in
/// spirit: build it once, read it everywhere.
struct OperatorWindow {
    CMatrix entries;
    std::string source;
    Exactness exactness = Exactness::closed_form;
    std::string basis = "f";

    int dim() const { return static_cast<int>(entries.rows()); }
};

double max_abs(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tol = kStructuralTol);

/// Spectral function calculus for Hermitian positive-definite windows.
/// Throws NotHermitian / NotPositiveDefinite (threshold relative to the
/// largest eigenvalue).
CMatrix hermitian_power(const CMatrix& m, double exponent);

OperatorWindow hermitian_inverse(const OperatorWindow& window);
OperatorWindow hermitian_sqrt(const OperatorWindow& window);

}  // namespace tdk
