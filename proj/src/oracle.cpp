#include "tdk/oracle.hpp"

#include <vector>

#include "tdk/aluthge.hpp"
#include "tdk/operators.hpp"
#include "tdk/window.hpp"

namespace tdk {

namespace {

// The oracle keeps its own schoolbook products so the reference path shares
// no algebra with the primary channel.
CMatrix naive_mul(const CMatrix& lhs, const CMatrix& rhs) {
    const int rows = static_cast<int>(lhs.rows());
    const int inner = static_cast<int>(lhs.cols());
    const int cols = static_cast<int>(rhs.cols());
    CMatrix out = CMatrix::Zero(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < inner; ++k) acc += lhs(i, k) * rhs(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

CVector naive_mul_vec(const CMatrix& lhs, const CVector& rhs) {
    const int rows = static_cast<int>(lhs.rows());
    const int inner = static_cast<int>(lhs.cols());
    CVector out = CVector::Zero(rows);
    for (int i = 0; i < rows; ++i) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < inner; ++k) acc += lhs(i, k) * rhs[k];
        out[i] = acc;
    }
    return out;
}

}  // namespace

CoefficientTable brute_shimorin_table(const KernelSpec& spec, int max_index, int dim) {
    require_analytic(spec);
    if (dim <= max_index) throw DimensionMismatch("oracle window smaller than table");

    const CMatrix l = left_inverse_window(spec, dim).entries;
    const CMatrix l_adj = l.adjoint();
    const CMatrix mz = mz_window(spec, dim).entries;
    const CMatrix projector = CMatrix::Identity(dim, dim) - naive_mul(mz, l);

    std::vector<CMatrix> l_pow{CMatrix::Identity(dim, dim)};
    std::vector<CMatrix> l_adj_pow{CMatrix::Identity(dim, dim)};
    for (int p = 1; p <= max_index; ++p) {
        l_pow.push_back(naive_mul(l_pow.back(), l));
        l_adj_pow.push_back(naive_mul(l_adj_pow.back(), l_adj));
    }

    CoefficientTable table;
    table.basis = "wandering";
    table.X = CMatrix(max_index + 1, max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        for (int n = 0; n <= max_index; ++n) {
            const CVector lifted = naive_mul_vec(l_pow[m], l_adj_pow[n].col(0));
            table.X(m, n) = naive_mul_vec(projector, lifted)[0];
        }
    }
    return table;
}

double gram_kernel_check(const KernelSpec& spec, const std::vector<Complex>& points,
                         int dim) {
    require_analytic(spec);
    const double rho = std::abs(spec.tail().rho);
    for (Complex z : points) {
        if (std::abs(z) >= 1.0 || std::abs(z) * rho >= 1.0) {
            throw DivergenceWarning("sample point outside the convergence disc");
        }
    }

    const int table_size = dim / 2;
    const CoefficientTable table = standard_aluthge_coeffs(spec, table_size);

    const CMatrix mod_inv =
        hermitian_power(modulus_inv_sq_window(spec, dim).entries, 0.5);

    double deviation = 0.0;
    for (Complex w : points) {
        CVector kernel_at_w(dim);
        for (int n = 0; n < dim; ++n) kernel_at_w[n] = std::conj(basis_eval(spec, n, w));
        const CVector transformed = naive_mul_vec(mod_inv, kernel_at_w);
        for (Complex z : points) {
            // Route 1: the monomial coefficient table.
            Complex from_table{0.0, 0.0};
            Complex zm{1.0, 0.0};
            for (int m = 0; m <= table_size; ++m) {
                Complex wn{1.0, 0.0};
                for (int n = 0; n <= table_size; ++n) {
                    from_table += table.X(m, n) * zm * wn;
                    wn *= std::conj(w);
                }
                zm *= z;
            }
            // Route 2: pointwise assembly from basis evaluations.
            Complex pointwise{0.0, 0.0};
            for (int m = 0; m < dim; ++m) pointwise += transformed[m] * basis_eval(spec, m, z);
            deviation = std::max(deviation, std::abs(from_table - pointwise));
        }
    }
    return deviation;
}

}  // namespace tdk
