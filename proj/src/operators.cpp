#include "tdk/operators.hpp"

#include "tdk/sequences.hpp"

namespace tdk {

namespace {

void check_dim(int dim) {
    if (dim < 1) throw DimensionMismatch("window dimension must be positive");
}

}  // namespace

int column_pad(const KernelSpec& spec) {
    return static_cast<int>(spec.b_support()) + 2;
}

OperatorWindow mz_window(const KernelSpec& spec, int dim) {
    check_dim(dim);
    DerivedSequences seq(spec);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        if (n + 1 < dim) m(n + 1, n) = spec.a(n) / spec.a(n + 1);
        if (n + 2 < dim) m(n + 2, n) = seq.c(n);
        Complex running = n + 2 < dim ? m(n + 2, n) : Complex{0.0, 0.0};
        for (int row = n + 3; row < dim; ++row) {
            running *= -spec.b(row - 1) / spec.a(row);
            m(row, n) = running;
        }
    }
    return {std::move(m), "Mz", Exactness::closed_form};
}

OperatorWindow mz_adjoint_window(const KernelSpec& spec, int dim) {
    OperatorWindow w = mz_window(spec, dim);
    return {w.entries.adjoint(), "MzAdj", Exactness::closed_form};
}

OperatorWindow left_inverse_window(const KernelSpec& spec, int dim) {
    check_dim(dim);
    require_analytic(spec);
    DerivedSequences seq(spec);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        m(n - 1, n) = spec.a(n) / spec.a(n - 1);
        Complex running = seq.d(n);
        m(n, n) = running;
        for (int row = n + 1; row < dim; ++row) {
            running *= -spec.b(row - 1) / spec.a(row);
            m(row, n) = running;
        }
    }
    return {std::move(m), "L", Exactness::closed_form};
}

OperatorWindow left_inverse_adjoint_window(const KernelSpec& spec, int dim) {
    OperatorWindow w = left_inverse_window(spec, dim);
    return {w.entries.adjoint(), "LAdj", Exactness::closed_form};
}

OperatorWindow lp_window(const KernelSpec& spec, int p, int dim) {
    check_dim(dim);
    if (p < 1) throw DimensionMismatch("power p must be >= 1");
    if (p == 1) {
        OperatorWindow w = left_inverse_window(spec, dim);
        w.source = "Lp(1)";
        return w;
    }
    require_analytic(spec);
    DerivedSequences seq(spec);
    CMatrix m = CMatrix::Zero(dim, dim);
    // Columns 1..p-1: L^p f_n is the constant beta_n^(p), expanded over the
    // basis through the monomial expansion of 1.
    for (int n = 1; n < std::min(p, dim); ++n) {
        Complex running = seq.beta_p(n, p) / spec.a(0);
        m(0, n) = running;
        for (int row = 1; row < dim; ++row) {
            running *= -spec.b(row - 1) / spec.a(row);
            m(row, n) = running;
        }
    }
    // Columns n >= p: superdiagonal-p entry, then the d_n^(p) tail.
    for (int n = p; n < dim; ++n) {
        m(n - p, n) = spec.a(n) / spec.a(n - p);
        if (n - p + 1 < dim) {
            Complex running = seq.d_p(n, p) / spec.a(n - p + 1);
            m(n - p + 1, n) = running;
            for (int row = n - p + 2; row < dim; ++row) {
                running *= -spec.b(row - 1) / spec.a(row);
                m(row, n) = running;
            }
        }
    }
    return {std::move(m), "Lp(" + std::to_string(p) + ")", Exactness::closed_form};
}

OperatorWindow lp_adjoint_window(const KernelSpec& spec, int p, int dim) {
    OperatorWindow w = lp_window(spec, p, dim);
    return {w.entries.adjoint(), "LAdjP(" + std::to_string(p) + ")",
            Exactness::closed_form};
}

OperatorWindow modulus_inv_sq_window(const KernelSpec& spec, int dim) {
    check_dim(dim);
    const int padded = dim + column_pad(spec);
    const CMatrix l = left_inverse_window(spec, padded).entries;
    CMatrix product = l * l.adjoint();
    return {product.topLeftCorner(dim, dim), "ModInvSq", Exactness::closed_form};
}

double verify_left_inverse(const KernelSpec& spec, int dim) {
    check_dim(dim);
    const int padded = dim + column_pad(spec);
    const CMatrix l = left_inverse_window(spec, padded).entries;
    const CMatrix mz = mz_window(spec, padded).entries;
    const CMatrix product = (l * mz).topLeftCorner(dim, dim);
    return max_abs(CMatrix(product - CMatrix::Identity(dim, dim)));
}

}  // namespace tdk
