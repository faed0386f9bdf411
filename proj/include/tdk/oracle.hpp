#pragma once

#include <vector>

#include "tdk/kernel_spec.hpp"
#include "tdk/shimorin.hpp"

namespace tdk {

// Brute-force reference computations.  These deliberately avoid the closed
// form power windows and the f_0 shortcut: dense products of the base-level
// matrices only.  Slow on purpose.

/// X[m][n] via repeated dense multiplication of [L] and projection with
/// P_W = I - M_z L.
CoefficientTable brute_shimorin_table(const KernelSpec& spec, int max_index, int dim);

/// Max deviation between the monomial-table evaluation of the transformed
/// kernel and its pointwise assembly <|M_z|^{-1} k(., w), k(., z)> from basis
/// evaluations, over all point pairs.
double gram_kernel_check(const KernelSpec& spec, const std::vector<Complex>& points, int dim);

}  // namespace tdk
