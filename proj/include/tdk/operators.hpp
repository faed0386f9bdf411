#pragma once

#include "tdk/kernel_spec.hpp"
#include "tdk/window.hpp"

namespace tdk {

/// Columns of [M_z] and [L_{M_z}] have at most b_support + 2 entries beyond
/// the band; padding products by this much keeps interior entries exact.
int column_pad(const KernelSpec& spec);

/// [M_z]: subdiagonal a_n/a_{n+1}, c_n on the second subdiagonal, then the
/// alternating b-product column tails.
OperatorWindow mz_window(const KernelSpec& spec, int dim);

OperatorWindow mz_adjoint_window(const KernelSpec& spec, int dim);

/// [L_{M_z}]: superdiagonal a_n/a_{n-1}, diagonal d_n, alternating b-product
/// column tails below.  Column 0 vanishes.
OperatorWindow left_inverse_window(const KernelSpec& spec, int dim);

OperatorWindow left_inverse_adjoint_window(const KernelSpec& spec, int dim);

/// [L^p]: superdiagonal-p entries a_n/a_{n-p}, d_n^(p) column tails, and for
/// p >= 2 the beta_n^(p) columns 1..p-1 carrying the constant-function
/// expansion.  p = 1 coincides with left_inverse_window.
OperatorWindow lp_window(const KernelSpec& spec, int p, int dim);

OperatorWindow lp_adjoint_window(const KernelSpec& spec, int p, int dim);

/// L L^* = |M_z|^{-2}, assembled from padded closed-form windows so the
/// returned block is exact.
OperatorWindow modulus_inv_sq_window(const KernelSpec& spec, int dim);

/// max |(L M_z - I)_{mn}| over the dim-window, from padded products.
double verify_left_inverse(const KernelSpec& spec, int dim);

}  // namespace tdk
