#pragma once

#include "tdk/kernel_spec.hpp"
#include "tdk/verdict.hpp"
#include "tdk/window.hpp"

namespace tdk {

/// Classification with two evidence channels: the closed-form recurrence and
/// a direct numeric expansion.  `verdict` carries the recurrence channel.
struct CriterionResult {
    Verdict verdict;
    double recurrence_residual = 0.0;  // max |conj(a_n) c_{mn} + conj(b_{n-1}) c_{m,n-1}|
    double offband_magnitude = 0.0;    // max off-band coefficient of the induced kernel
    bool channels_agree = false;
};

/// Monomial coefficients alpha_{mn} of the induced kernel
/// <P k(., w), k(., z)>, for 0 <= m, n <= band.
CMatrix induced_kernel_coeffs(const CMatrix& p_window, const KernelSpec& spec, int band);

/// Does <P k(., w), k(., z)> define a tridiagonal kernel?  P is a Hermitian
/// window in the f-basis; indices up to `band` are checked.
CriterionResult positive_kernel_criterion(const OperatorWindow& p_window,
                                          const KernelSpec& spec, int band);

struct QuasinormalReport {
    Verdict verdict;
    double r = 0.0;         // ||M_z f_0||^2
    double residual = 0.0;  // ||[M_z^*, M_z] - r P_{f_0}||_max
    bool channels_agree = false;  // commutator window vs row/column inner products
};

/// [M_z^*, M_z] = r P_{f_0} test.  Throws NormalityDetected if the commutator
/// vanishes outright.
QuasinormalReport quasinormal_test(const KernelSpec& spec, int dim);

/// For truncated specs (b_0 = b_1 = 0, finitely many nonzero b): decides
/// tridiagonality of the transformed shift's model kernel from the middle
/// block of |M_z|^{-1} alone.
CriterionResult truncated_sa_criterion(const KernelSpec& spec);

}  // namespace tdk
