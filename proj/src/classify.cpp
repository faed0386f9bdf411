#include "tdk/classify.hpp"

#include <algorithm>

#include "tdk/operators.hpp"
#include "tdk/sequences.hpp"

namespace tdk {

CMatrix induced_kernel_coeffs(const CMatrix& p, const KernelSpec& spec, int band) {
    if (band < 0) throw DimensionMismatch("band must be >= 0");
    if (p.rows() <= band || p.cols() <= band) {
        throw DimensionMismatch("window too small for requested band");
    }
    // <P k(., w), k(., z)> = sum p_{mn} f_m(z) conj(f_n(w)); collecting the
    // coefficient of z^mu conj(w)^nu gives four neighbour terms.
    CMatrix alpha = CMatrix::Zero(band + 1, band + 1);
    for (int mu = 0; mu <= band; ++mu) {
        for (int nu = 0; nu <= band; ++nu) {
            Complex value = spec.a(mu) * std::conj(spec.a(nu)) * p(mu, nu);
            if (nu >= 1) value += spec.a(mu) * std::conj(spec.b(nu - 1)) * p(mu, nu - 1);
            if (mu >= 1) value += spec.b(mu - 1) * std::conj(spec.a(nu)) * p(mu - 1, nu);
            if (mu >= 1 && nu >= 1) {
                value += spec.b(mu - 1) * std::conj(spec.b(nu - 1)) * p(mu - 1, nu - 1);
            }
            alpha(mu, nu) = value;
        }
    }
    return alpha;
}

namespace {

struct RecurrenceScan {
    double max = 0.0;
    int m = 0;
    int n = 0;

    Verdict verdict(double tol) const {
        Verdict v = banded_verdict(max, m, n, tol);
        if (v.fails() && first_mag > tol) {
            v.witness = Witness{first_m, first_n, first_mag};
        }
        return v;
    }

    double first_mag = 0.0;  // first residual beyond tol, scan order
    int first_m = 0;
    int first_n = 0;
};

// Residuals of conj(a_n) c_{mn} + conj(b_{n-1}) c_{m,n-1} = 0 over the upper
// triangle rows of P, the step form of the classification recurrence.
RecurrenceScan scan_recurrence(const CMatrix& p, const KernelSpec& spec, int band,
                               double tol) {
    RecurrenceScan scan;
    for (int m = 0; m + 2 <= band; ++m) {
        for (int n = m + 2; n <= band; ++n) {
            const double resid =
                std::abs(std::conj(spec.a(n)) * p(m, n) +
                         std::conj(spec.b(n - 1)) * p(m, n - 1));
            if (resid > scan.max) {
                scan.max = resid;
                scan.m = m;
                scan.n = n;
            }
            if (scan.first_mag == 0.0 && resid > tol) {
                scan.first_mag = resid;
                scan.first_m = m;
                scan.first_n = n;
            }
        }
    }
    return scan;
}

bool verdicts_agree(const Verdict& lhs, const Verdict& rhs) {
    if (lhs.indeterminate() || rhs.indeterminate()) return false;
    return lhs.holds() == rhs.holds();
}

}  // namespace

CriterionResult positive_kernel_criterion(const OperatorWindow& p_window,
                                          const KernelSpec& spec, int band) {
    const CMatrix& p = p_window.entries;
    if (!is_hermitian(p)) throw NotHermitian("P window is not Hermitian");
    if (p.rows() <= band) throw DimensionMismatch("window too small for requested band");

    CriterionResult result;
    const double scale = std::max(kAbsFloor / kRelTol, max_abs(p));
    const double tol = kRelTol * scale;
    const RecurrenceScan scan = scan_recurrence(p, spec, band, tol);
    result.recurrence_residual = scan.max;
    result.verdict = scan.verdict(tol);

    const CMatrix alpha = induced_kernel_coeffs(p, spec, band);
    const Verdict direct = offband_verdict(alpha);
    result.offband_magnitude = offband_max(alpha).magnitude;
    result.channels_agree = verdicts_agree(result.verdict, direct);
    return result;
}

QuasinormalReport quasinormal_test(const KernelSpec& spec, int dim) {
    if (dim < 2) throw DimensionMismatch("commutator window needs dim >= 2");
    const int padded = dim + column_pad(spec);
    const CMatrix mz = mz_window(spec, padded).entries;
    const CMatrix commutator =
        (mz.adjoint() * mz - mz * mz.adjoint()).topLeftCorner(dim, dim);

    QuasinormalReport report;
    report.r = mz.col(0).squaredNorm();

    const double scale = std::max({1.0, report.r, max_abs(commutator)});
    const double tol = kRelTol * scale;
    if (max_abs(commutator) <= tol) {
        throw NormalityDetected("commutator of M_z vanishes on the window");
    }

    CMatrix deviation = commutator;
    deviation(0, 0) -= report.r;
    double residual = 0.0;
    int wm = 0;
    int wn = 0;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            const double mag = std::abs(deviation(m, n));
            if (mag > residual) {
                residual = mag;
                wm = m;
                wn = n;
            }
        }
    }
    report.residual = residual;
    report.verdict = banded_verdict(residual, wm, wn, tol);

    // Second channel: the row/column inner products <C_0, C_i> = 0 and
    // <C_n, C_m> = <R_m, R_n>, taken over exactly padded columns.
    double cross_max = 0.0;
    for (int i = 1; i < dim; ++i) {
        cross_max = std::max(cross_max, std::abs(mz.col(i).dot(mz.col(0))));
    }
    for (int n = 1; n < dim; ++n) {
        for (int m = 1; m <= n; ++m) {
            const Complex cols = mz.col(m).dot(mz.col(n));   // <C_n, C_m>
            const Complex rows = mz.row(n).dot(mz.row(m));   // <R_m, R_n>
            cross_max = std::max(cross_max, std::abs(cols - rows));
        }
    }
    const Verdict cross_channel = banded_verdict(cross_max, 0, 0, tol);
    report.channels_agree = verdicts_agree(report.verdict, cross_channel);
    return report;
}

CriterionResult truncated_sa_criterion(const KernelSpec& spec) {
    if (spec.b(0) != Complex{0.0, 0.0} || spec.b(1) != Complex{0.0, 0.0}) {
        throw NotTruncated("spec needs b_0 = b_1 = 0");
    }
    const int support = static_cast<int>(spec.b_support());

    CriterionResult result;
    if (support == 0) {
        // Diagonal kernel: M_z is a weighted shift and every channel is clean.
        result.verdict = Verdict{};
        result.channels_agree = true;
        return result;
    }
    const int order = support - 1;  // highest index with b != 0, >= 2 here

    // Middle block of |M_z|^{-1}: rows/cols 1..order+1 of [L] against columns
    // 2..order+2 give the lower-upper factorization of the squared block.
    const int block = order + 1;
    const CMatrix l = left_inverse_window(spec, order + 3).entries;
    const CMatrix factor = l.block(1, 2, block, block);
    const CMatrix block_sq = factor * factor.adjoint();
    const CMatrix a = hermitian_power(block_sq, 0.5);

    const double scale = std::max(kAbsFloor / kRelTol, max_abs(a));
    const double tol = kRelTol * scale;
    RecurrenceScan scan;
    for (int m = 1; m + 2 <= order + 1; ++m) {
        for (int n = m + 2; n <= order + 1; ++n) {
            const double resid =
                std::abs(std::conj(spec.a(n)) * a(m - 1, n - 1) +
                         std::conj(spec.b(n - 1)) * a(m - 1, n - 2));
            if (resid > scan.max) {
                scan.max = resid;
                scan.m = m;
                scan.n = n;
            }
            if (scan.first_mag == 0.0 && resid > tol) {
                scan.first_mag = resid;
                scan.first_m = m;
                scan.first_n = n;
            }
        }
    }
    result.recurrence_residual = scan.max;
    result.verdict = scan.verdict(tol);

    // Cross-channel: assemble |M_z|^{-1} from its block structure and expand
    // the induced kernel directly.
    const int full = order + 5;
    CMatrix mod_inv = CMatrix::Zero(full, full);
    mod_inv(0, 0) = std::abs(spec.a(1) / spec.a(0));
    mod_inv.block(1, 1, block, block) = a;
    for (int k = order + 2; k < full; ++k) {
        mod_inv(k, k) = std::abs(spec.a(k + 1) / spec.a(k));
    }
    const CMatrix alpha = induced_kernel_coeffs(mod_inv, spec, full - 1);
    const Verdict direct = offband_verdict(alpha);
    result.offband_magnitude = offband_max(alpha).magnitude;
    result.channels_agree = verdicts_agree(result.verdict, direct);
    return result;
}

}  // namespace tdk
