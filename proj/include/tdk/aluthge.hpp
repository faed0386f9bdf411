#pragma once

#include "tdk/kernel_spec.hpp"
#include "tdk/shimorin.hpp"
#include "tdk/window.hpp"

namespace tdk {

/// Polar-decomposition data for M_z on one window: |M_z| powers, the partial
/// isometry, the transformed shift, and the rank-one correction vector.
struct AluthgeData {
    OperatorWindow mod_inv_sq;    // |M_z|^{-2}
    OperatorWindow mod_inv;       // |M_z|^{-1}
    OperatorWindow mod;           // |M_z|
    OperatorWindow mod_sqrt;      // |M_z|^{1/2}
    OperatorWindow mod_inv_sqrt;  // |M_z|^{-1/2}
    OperatorWindow partial_isometry;  // U = M_z |M_z|^{-1}
    OperatorWindow tilde;             // |M_z|^{1/2} M_z |M_z|^{-1/2}
    CVector f_vector;                 // range vector of F: g -> <g, f_0> f_vector
    int interior = 0;                 // sub-window on which the identities are certified
    double doubling_residual = 0.0;
};

AluthgeData aluthge_data(const KernelSpec& spec, int dim);

/// v = (M_z^* |M_z| M_z)^{-1} M_z^* |M_z| f_0 in the f-basis.
CVector rank_one_f_vector(const KernelSpec& spec, int dim);

/// Coefficient table of the analytic-model kernel of the transformed shift,
/// over the normalized wandering vector |M_z|^{-1/2} f_0.  Doubling the
/// window must not move any entry by more than 1e-8 (UnstableTruncation).
CoefficientTable shimorin_aluthge_coeffs(const KernelSpec& spec, int max_index);

/// Monomial-basis coefficients of <|M_z|^{-1} k(., w), k(., z)>.
CoefficientTable standard_aluthge_coeffs(const KernelSpec& spec, int max_index);

}  // namespace tdk
