#pragma once

#include <string>
#include <vector>

#include "tdk/kernel_spec.hpp"
#include "tdk/verdict.hpp"
#include "tdk/window.hpp"

namespace tdk {

/// Hermitian table of kernel coefficients X_{mn}.  Scalar-valued: the
/// wandering space of these shifts is one-dimensional.
struct CoefficientTable {
    static constexpr int wandering_dim = 1;

    CMatrix X;
    std::string basis = "wandering";  // "wandering" or "monomial"
    double doubling_residual = 0.0;   // interior change under window doubling

    int max_index() const { return static_cast<int>(X.rows()) - 1; }
};

/// X[m][n] = <L^{*n} f_0, L^{*m} f_0>, the power-series coefficients of the
/// analytic-model kernel of M_z.  window < 0 picks the default padded size.
CoefficientTable shimorin_coeffs(const KernelSpec& spec, int max_index, int window = -1);

/// b_n / a_n constant through the horizon and the tail.  Witness: first index
/// where constancy breaks.
Verdict is_weighted_shift(const KernelSpec& spec, std::size_t horizon);

/// Tridiagonality of the model kernel, decided twice: the exact criterion
/// (b_0 = 0 or weighted shift) and off-band vanishing of the numeric table.
struct TridiagonalVerdict {
    Verdict criterion;
    Verdict numeric;
    double offband_magnitude = 0.0;

    bool agree() const {
        if (numeric.indeterminate()) return false;
        return criterion.holds() == numeric.holds();
    }
};

TridiagonalVerdict shimorin_tridiagonal_verdict(const KernelSpec& spec, int max_index);

/// Taylor coefficients of the model map applied to h = sum target_k f_k:
/// coefficient n is <L^n h, f_0>.
std::vector<Complex> analytic_model_coeffs(const KernelSpec& spec,
                                           const std::vector<Complex>& target,
                                           int max_index);

}  // namespace tdk
