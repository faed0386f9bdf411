#include "tdk/aluthge.hpp"

#include <algorithm>

#include "tdk/classify.hpp"
#include "tdk/operators.hpp"

namespace tdk {

namespace {

// All |M_z| powers come from one eigendecomposition of L L^* = |M_z|^{-2}.
struct ModulusFamily {
    CMatrix inv_sq;    // |M|^{-2}
    CMatrix inv;       // |M|^{-1}
    CMatrix mod;       // |M|
    CMatrix sqrt;      // |M|^{1/2}
    CMatrix inv_sqrt;  // |M|^{-1/2}
};

ModulusFamily modulus_family(const KernelSpec& spec, int dim) {
    ModulusFamily fam;
    fam.inv_sq = modulus_inv_sq_window(spec, dim).entries;
    Eigen::SelfAdjointEigenSolver<CMatrix> eigen(fam.inv_sq);
    if (eigen.info() != Eigen::Success) throw Error("eigendecomposition failed");
    const Eigen::VectorXd values = eigen.eigenvalues();
    if (values.minCoeff() <= kStructuralTol * values.maxCoeff()) {
        throw NotPositiveDefinite("finite section of |M_z|^{-2} is numerically singular");
    }
    const CMatrix& v = eigen.eigenvectors();
    auto power = [&](double exponent) {
        Eigen::VectorXd powered(values.size());
        for (Eigen::Index i = 0; i < values.size(); ++i) {
            powered[i] = std::pow(values[i], exponent);
        }
        return CMatrix(v * powered.asDiagonal() * v.adjoint());
    };
    fam.inv = power(0.5);
    fam.mod = power(-0.5);
    fam.sqrt = power(-0.25);
    fam.inv_sqrt = power(0.25);
    return fam;
}

CVector f_vector_padded(const CMatrix& mz, const CMatrix& mod) {
    const CMatrix a = mz.adjoint() * mod * mz;  // M_z^* |M_z| M_z, Hermitian PD
    const CVector rhs = mz.adjoint() * mod.col(0);
    return a.ldlt().solve(rhs);
}

struct RawAluthge {
    ModulusFamily fam;
    CMatrix mz;
    CMatrix u;
    CMatrix tilde;
    CVector f;
};

RawAluthge build_raw(const KernelSpec& spec, int padded) {
    RawAluthge raw;
    raw.fam = modulus_family(spec, padded);
    raw.mz = mz_window(spec, padded).entries;
    raw.u = raw.mz * raw.fam.inv;
    raw.tilde = raw.fam.sqrt * raw.mz * raw.fam.inv_sqrt;
    raw.f = f_vector_padded(raw.mz, raw.fam.mod);
    return raw;
}

}  // namespace

AluthgeData aluthge_data(const KernelSpec& spec, int dim) {
    if (dim < 2) throw DimensionMismatch("aluthge window needs dim >= 2");
    require_analytic(spec);
    const int pad = column_pad(spec);
    const RawAluthge raw = build_raw(spec, dim + pad);
    const RawAluthge doubled = build_raw(spec, 2 * dim + pad);

    AluthgeData data;
    auto window = [&](const CMatrix& m, const char* tag) {
        return OperatorWindow{m.topLeftCorner(dim, dim), tag, Exactness::truncated};
    };
    data.mod_inv_sq = {raw.fam.inv_sq.topLeftCorner(dim, dim), "ModInvSq",
                       Exactness::closed_form};
    data.mod_inv = window(raw.fam.inv, "ModInv");
    data.mod = window(raw.fam.mod, "Mod");
    data.mod_sqrt = window(raw.fam.sqrt, "ModSqrt");
    data.mod_inv_sqrt = window(raw.fam.inv_sqrt, "ModInvSqrt");
    data.partial_isometry = window(raw.u, "PartialIsometry");
    data.tilde = window(raw.tilde, "Tilde");
    data.f_vector = raw.f.head(dim);
    data.interior = dim - pad;

    double residual = 0.0;
    auto compare = [&](const CMatrix& small, const CMatrix& big) {
        residual = std::max(
            residual, max_abs(CMatrix(small.topLeftCorner(dim, dim) -
                                      big.topLeftCorner(dim, dim))));
    };
    compare(raw.fam.inv, doubled.fam.inv);
    compare(raw.fam.sqrt, doubled.fam.sqrt);
    compare(raw.tilde, doubled.tilde);
    residual = std::max(residual,
                        (raw.f.head(dim) - doubled.f.head(dim)).cwiseAbs().maxCoeff());
    data.doubling_residual = residual;
    return data;
}

CVector rank_one_f_vector(const KernelSpec& spec, int dim) {
    if (dim < 2) throw DimensionMismatch("window needs dim >= 2");
    require_analytic(spec);
    const int padded = dim + column_pad(spec);
    const RawAluthge raw = build_raw(spec, padded);
    return raw.f.head(dim);
}

namespace {

CMatrix sa_table(const KernelSpec& spec, int max_index, int dim) {
    const int padded = dim + column_pad(spec);
    const RawAluthge raw = build_raw(spec, padded);
    const CMatrix l = left_inverse_window(spec, padded).entries;

    CMatrix perturbed = l;
    perturbed.col(0) += raw.f;  // L + F, with F g = <g, f_0> f_vector
    const CMatrix l_tilde = raw.fam.sqrt * perturbed * raw.fam.inv_sqrt;

    CVector wandering = raw.fam.inv_sqrt.col(0);
    wandering /= wandering.norm();

    std::vector<CVector> iterates;
    iterates.reserve(max_index + 1);
    iterates.push_back(wandering);
    const CMatrix l_tilde_adj = l_tilde.adjoint();
    for (int p = 1; p <= max_index; ++p) {
        iterates.push_back(l_tilde_adj * iterates.back());
    }
    CMatrix x(max_index + 1, max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        for (int n = 0; n <= max_index; ++n) {
            x(m, n) = iterates[m].dot(iterates[n]);
        }
    }
    return x;
}

CMatrix standard_table(const KernelSpec& spec, int max_index, int dim) {
    const CMatrix mod_inv = modulus_family(spec, dim + column_pad(spec)).inv;
    return induced_kernel_coeffs(mod_inv, spec, max_index);
}

int default_window(const KernelSpec& spec, int max_index) {
    return std::max(4 * max_index, 2 * static_cast<int>(spec.b_support()) + 16);
}

}  // namespace

CoefficientTable shimorin_aluthge_coeffs(const KernelSpec& spec, int max_index) {
    if (max_index < 0) throw DimensionMismatch("table index must be >= 0");
    require_analytic(spec);
    const int dim = default_window(spec, max_index);
    CoefficientTable table;
    table.X = sa_table(spec, max_index, dim);
    table.basis = "wandering";
    table.doubling_residual =
        max_abs(CMatrix(table.X - sa_table(spec, max_index, 2 * dim)));
    if (table.doubling_residual > 1e-8) {
        throw UnstableTruncation("table entries moved by " +
                                 std::to_string(table.doubling_residual) +
                                 " under window doubling");
    }
    return table;
}

CoefficientTable standard_aluthge_coeffs(const KernelSpec& spec, int max_index) {
    if (max_index < 0) throw DimensionMismatch("table index must be >= 0");
    require_analytic(spec);
    const int dim = std::max(default_window(spec, max_index), max_index + 2);
    CoefficientTable table;
    table.X = standard_table(spec, max_index, dim);
    table.basis = "monomial";
    table.doubling_residual =
        max_abs(CMatrix(table.X - standard_table(spec, max_index, 2 * dim)));
    if (table.doubling_residual > 1e-8) {
        throw UnstableTruncation("table entries moved by " +
                                 std::to_string(table.doubling_residual) +
                                 " under window doubling");
    }
    return table;
}

}  // namespace tdk
