// Acceptance suite: one criterion per run block, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "tdk/aluthge.hpp"
#include "tdk/classify.hpp"
#include "tdk/operators.hpp"
#include "tdk/oracle.hpp"
#include "tdk/shimorin.hpp"

using namespace tdk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& label) {
        if (!condition) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + label;
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", number,
                title.c_str(), seconds, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    if (!outcome.pass) ++failures;
}

std::vector<KernelSpec> seeded_corpus(int count) {
    std::vector<KernelSpec> specs;
    specs.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(1000 + i);
        specs.push_back(corpus::random_spec(rng, static_cast<corpus::BShape>(i % 3)));
    }
    return specs;
}

const KernelSpec kSec4({{1, 0}}, {{0.5, 0}});
const KernelSpec kSec9({{1, 0}, {1, 0}}, {{1, 0}, {1, 0}});

}  // namespace

int main() {
    criterion(1, "rank-one example: X(1,3) = 1/4 and non-tridiagonal verdict", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const CoefficientTable table = shimorin_coeffs(kSec4, 8);
        const TridiagonalVerdict verdict = shimorin_tridiagonal_verdict(kSec4, 8);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(std::abs(table.X(1, 3) - Complex{0.25, 0}) < 1e-12, "X(1,3) != 1/4");
        out.require(verdict.criterion.fails() && verdict.numeric.fails(), "verdict");
        out.require(verdict.numeric.witness && verdict.numeric.witness->m == 1 &&
                        verdict.numeric.witness->n == 3,
                    "witness not (1,3)");
        out.require(seconds < 1.0, "runtime >= 1s");
    });

    criterion(2, "block example: |Mz|^-2 top block and expanded kernel pattern", [](Outcome& out) {
        const CMatrix inv_sq = modulus_inv_sq_window(kSec4, 6).entries;
        out.require(std::abs(inv_sq(0, 0) - Complex{1, 0}) < 1e-12 &&
                        std::abs(inv_sq(0, 1) - Complex{-0.5, 0}) < 1e-12 &&
                        std::abs(inv_sq(1, 0) - Complex{-0.5, 0}) < 1e-12 &&
                        std::abs(inv_sq(1, 1) - Complex{1.25, 0}) < 1e-12,
                    "top block");
        const CMatrix root = hermitian_power(inv_sq.topLeftCorner(4, 4), 0.5);
        const double alpha = root(0, 0).real();
        const double beta = root(0, 1).real();
        const double gamma = root(1, 1).real();
        const CoefficientTable table = standard_aluthge_coeffs(kSec4, 8);
        out.require(std::abs(alpha / 2 + beta) > 1e-6, "alpha/2 + beta vanished");
        out.require(std::abs(table.X(0, 0) - Complex{alpha, 0}) < 1e-10, "K constant term");
        out.require(std::abs(table.X(0, 1) - Complex{alpha / 2 + beta, 0}) < 1e-10 &&
                        std::abs(table.X(1, 0) - Complex{alpha / 2 + beta, 0}) < 1e-10,
                    "K band terms");
        out.require(std::abs(table.X(1, 1) - Complex{alpha / 4 + beta + gamma, 0}) < 1e-10,
                    "K (1,1) term");
        for (int n = 2; n <= 8; ++n) {
            out.require(std::abs(table.X(n, n) - Complex{1, 0}) < 1e-10, "K diagonal tail");
        }
        out.require(offband_max(table.X).magnitude < 1e-10, "off-band coefficients");
    });

    criterion(3, "closing example: modulus block, F = 0, split verdicts", [](Outcome& out) {
        const double inv_sqrt5 = 1.0 / std::sqrt(5.0);
        const AluthgeData data = aluthge_data(kSec9, 16);
        out.require(std::abs(data.mod_inv.entries(1, 2) - Complex{-inv_sqrt5, 0}) < 1e-10,
                    "|Mz|^-1 corner entry");
        out.require(data.f_vector.norm() < 1e-12, "F vector");
        const CoefficientTable sa = shimorin_aluthge_coeffs(kSec9, 8);
        out.require(std::abs(std::abs(sa.X(1, 3)) - inv_sqrt5) < 1e-9, "tilde X(1,3)");
        const CoefficientTable standard = standard_aluthge_coeffs(kSec9, 8);
        out.require(offband_max(standard.X).magnitude < 1e-10, "standard kernel off-band");
    });

    criterion(4, "criterion/table equivalence over 100 seeded specs", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<KernelSpec> specs = seeded_corpus(100);
        int disagreements = 0;
        int indeterminate = 0;
        for (const KernelSpec& spec : specs) {
            const TridiagonalVerdict v = shimorin_tridiagonal_verdict(spec, 8);
            if (v.numeric.indeterminate()) ++indeterminate;
            else if (!v.agree()) ++disagreements;
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
        out.require(indeterminate == 0, std::to_string(indeterminate) + " in the band");
        out.require(seconds < 30.0, "runtime >= 30s");
    });

    criterion(5, "left-inverse identity and modulus window cross-checks", [](Outcome& out) {
        for (const KernelSpec& spec : seeded_corpus(100)) {
            const int dim = 12;
            out.require(verify_left_inverse(spec, dim) < 1e-12, "L Mz != I");

            const int padded = dim + column_pad(spec);
            const CMatrix l = left_inverse_window(spec, padded).entries;
            const CMatrix same_path = (l * l.adjoint()).topLeftCorner(dim, dim);
            out.require(
                max_abs(CMatrix(same_path - modulus_inv_sq_window(spec, dim).entries)) == 0.0,
                "LL* construction path");

            const CMatrix mz = mz_window(spec, padded).entries;
            const CMatrix gram = (mz.adjoint() * mz).topLeftCorner(dim, dim);
            const CMatrix dense_inverse = gram.inverse();
            const int inner = dim - column_pad(spec);
            out.require(max_abs(CMatrix(dense_inverse.topLeftCorner(inner, inner) -
                                        same_path.topLeftCorner(inner, inner))) < 1e-9,
                        "dense (Mz* Mz)^-1 interior");
        }
    });

    criterion(6, "truncated suite: all three channels agree, F = 0", [](Outcome& out) {
        int checked = 0;
        for (int i = 0; i < 50; ++i) {
            std::mt19937_64 rng(2000 + i);
            const KernelSpec spec = i % 5 == 4
                                        ? corpus::random_diagonal_spec(rng, false)
                                        : corpus::random_truncated_spec(rng, 5);
            const CriterionResult criterion_verdict = truncated_sa_criterion(spec);
            const Verdict sa = offband_verdict(shimorin_aluthge_coeffs(spec, 8).X);
            const Verdict standard = offband_verdict(standard_aluthge_coeffs(spec, 8).X);
            out.require(!sa.indeterminate() && !standard.indeterminate(),
                        "indeterminate table verdict");
            out.require(criterion_verdict.verdict.holds() == sa.holds(),
                        "criterion vs model table");
            out.require(sa.holds() == standard.holds(), "model vs standard table");
            out.require(rank_one_f_vector(spec, 12).norm() < 1e-12, "F vector");
            ++checked;
        }
        out.require(checked == 50, "corpus size");
    });

    criterion(7, "quasinormality: constant weights iff commutator r P", [](Outcome& out) {
        for (int i = 0; i < 20; ++i) {
            std::mt19937_64 rng(3000 + i);
            const KernelSpec spec = corpus::constant_weight_spec(rng);
            const QuasinormalReport report = quasinormal_test(spec, 10);
            const double alpha = std::abs(spec.a(0) / spec.a(1));
            out.require(report.verdict.holds(), "constant weights not quasinormal");
            out.require(std::abs(report.r - alpha * alpha) < 1e-10, "r != alpha^2");
            out.require(report.residual < 1e-10, "commutator residual");
            out.require(report.channels_agree, "channel split (constant)");
        }
        for (int i = 0; i < 20; ++i) {
            std::mt19937_64 rng(3100 + i);
            const KernelSpec spec = corpus::random_diagonal_spec(rng, false);
            const ValidationReport v = validate_spec(spec);
            if (v.sup_ratio - v.bounded_below < 0.05) continue;
            const QuasinormalReport report = quasinormal_test(spec, 10);
            out.require(report.verdict.fails(), "non-constant weights accepted");
            out.require(report.channels_agree, "channel split (non-constant)");
        }
        for (const KernelSpec& spec : seeded_corpus(100)) {
            out.require(quasinormal_test(spec, 10).channels_agree, "channel split (corpus)");
        }
    });

    criterion(8, "transformed weighted shifts carry geometric-mean weights", [](Outcome& out) {
        for (int i = 0; i < 20; ++i) {
            std::mt19937_64 rng(4000 + i);
            const KernelSpec spec = corpus::random_diagonal_spec(rng, true);
            const AluthgeData data = aluthge_data(spec, 12);
            for (int n = 0; n + 1 < data.interior; ++n) {
                const double alpha_n = std::abs(spec.a(n) / spec.a(n + 1));
                const double alpha_next = std::abs(spec.a(n + 1) / spec.a(n + 2));
                out.require(std::abs(data.tilde.entries(n + 1, n) -
                                     Complex{std::sqrt(alpha_n * alpha_next), 0}) < 1e-10,
                            "weight at " + std::to_string(n));
            }
        }
    });

    criterion(9, "reference computations match the primary channels", [](Outcome& out) {
        // Corpus tails grow as fast as |rho| = 1.3, so the sample radius and
        // window are sized for truncation tails below the 1e-9 budget.
        std::vector<Complex> grid;
        for (int i = -1; i <= 1; ++i) {
            for (int j = -1; j <= 1; ++j) grid.push_back(Complex{0.25 * i, 0.25 * j});
        }
        for (const KernelSpec& spec : seeded_corpus(100)) {
            const CoefficientTable primary = shimorin_coeffs(spec, 6);
            const CoefficientTable reference = brute_shimorin_table(spec, 6, 24);
            out.require(max_abs(CMatrix(primary.X - reference.X)) <
                            1e-10 * std::max(1.0, max_abs(primary.X)),
                        "table mismatch");
            out.require(gram_kernel_check(spec, grid, 56) < 1e-9, "pointwise kernel mismatch");
        }
    });

    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
