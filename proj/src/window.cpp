#include "tdk/window.hpp"

#include <cmath>

namespace tdk {

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(CMatrix(m - m.adjoint())) <= tol * scale;
}

CMatrix hermitian_power(const CMatrix& m, double exponent) {
    if (!is_hermitian(m)) {
        throw NotHermitian("window is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eigen(m);
    if (eigen.info() != Eigen::Success) {
        throw Error("eigendecomposition failed");
    }
    const Eigen::VectorXd values = eigen.eigenvalues();
    const double largest = values.maxCoeff();
    if (largest <= 0.0 || values.minCoeff() <= kStructuralTol * largest) {
        throw NotPositiveDefinite("smallest eigenvalue within tolerance of zero");
    }
    Eigen::VectorXd powered(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        powered[i] = std::pow(values[i], exponent);
    }
    return eigen.eigenvectors() * powered.asDiagonal() *
           eigen.eigenvectors().adjoint();
}

OperatorWindow hermitian_inverse(const OperatorWindow& window) {
    return {hermitian_power(window.entries, -1.0), window.source + "Inv",
            Exactness::truncated};
}

OperatorWindow hermitian_sqrt(const OperatorWindow& window) {
    return {hermitian_power(window.entries, 0.5), window.source + "Sqrt",
            Exactness::truncated};
}

}  // namespace tdk
