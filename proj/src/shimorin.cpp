#include "tdk/shimorin.hpp"

#include <algorithm>

#include "tdk/operators.hpp"
#include "tdk/sequences.hpp"

namespace tdk {

namespace {

// X[m][n] = <v_n, v_m> over the columns v_p = L^{*p} f_0 of the closed-form
// power windows.
CMatrix table_from_windows(const KernelSpec& spec, int max_index, int window) {
    std::vector<CVector> columns;
    columns.reserve(max_index + 1);
    columns.push_back(CVector::Unit(window, 0));
    for (int p = 1; p <= max_index; ++p) {
        columns.push_back(lp_adjoint_window(spec, p, window).entries.col(0));
    }
    CMatrix x(max_index + 1, max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        for (int n = 0; n <= max_index; ++n) {
            x(m, n) = columns[m].dot(columns[n]);  // conjugates the first argument
        }
    }
    return x;
}

}  // namespace

CoefficientTable shimorin_coeffs(const KernelSpec& spec, int max_index, int window) {
    if (max_index < 0) throw DimensionMismatch("table index must be >= 0");
    require_analytic(spec);
    const int needed = 2 * max_index + static_cast<int>(spec.b_support()) + 2;
    const int dim = window > 0 ? std::max(window, max_index + 1) : std::max(needed, max_index + 1);

    CoefficientTable table;
    table.X = table_from_windows(spec, max_index, dim);
    table.basis = "wandering";
    table.doubling_residual =
        max_abs(CMatrix(table.X - table_from_windows(spec, max_index, 2 * dim)));
    return table;
}

Verdict is_weighted_shift(const KernelSpec& spec, std::size_t horizon) {
    const std::size_t p = spec.prefix_size();
    const Complex base = spec.b(0) / spec.a(0);
    // The zero-b tail forces the constant to be zero, so the whole prefix is
    // always in scope; index p stands in for every tail index.
    const std::size_t last = std::max(horizon, p);
    for (std::size_t n = 1; n <= last; ++n) {
        const Complex ratio = spec.b(n) / spec.a(n);
        if (!approx_equal(ratio, base)) {
            Verdict v;
            v.state = Verdict::State::fails;
            v.witness = Witness{static_cast<int>(n), static_cast<int>(n),
                                std::abs(ratio - base)};
            return v;
        }
    }
    return Verdict{};
}

TridiagonalVerdict shimorin_tridiagonal_verdict(const KernelSpec& spec, int max_index) {
    require_analytic(spec);
    TridiagonalVerdict result;

    const bool b0_zero = spec.b(0) == Complex{0.0, 0.0};
    const Verdict shift = is_weighted_shift(spec, static_cast<std::size_t>(max_index));
    if (b0_zero || shift.holds()) {
        result.criterion = Verdict{};
    } else {
        result.criterion.state = Verdict::State::fails;
        result.criterion.witness = shift.witness;
    }

    const CoefficientTable table = shimorin_coeffs(spec, max_index);
    result.numeric = offband_verdict(table.X);
    result.offband_magnitude = offband_max(table.X).magnitude;
    return result;
}

std::vector<Complex> analytic_model_coeffs(const KernelSpec& spec,
                                           const std::vector<Complex>& target,
                                           int max_index) {
    if (max_index < 0) throw DimensionMismatch("coefficient count must be >= 0");
    require_analytic(spec);
    const int support = static_cast<int>(target.size());
    const int dim = std::max({support, max_index + 1, column_pad(spec)}) + 2;

    CVector h = CVector::Zero(dim);
    for (int k = 0; k < support; ++k) h[k] = target[k];

    const CMatrix l = left_inverse_window(spec, dim).entries;
    std::vector<Complex> coeffs(max_index + 1);
    for (int n = 0; n <= max_index; ++n) {
        coeffs[n] = h[0];  // <L^n h, f_0>
        h = l * h;
    }
    return coeffs;
}

}  // namespace tdk
