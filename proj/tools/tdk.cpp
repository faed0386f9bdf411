// tdk: JSON-in / JSON-out front end for shifts on tridiagonal reproducing
// kernel spaces.  Machine output goes to stdout; --pretty matrices to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <iostream>
#include <string>

#include "tdk/aluthge.hpp"
#include "tdk/classify.hpp"
#include "tdk/json_io.hpp"
#include "tdk/operators.hpp"
#include "tdk/shimorin.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitRejected = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitUsage = 64;

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

void pretty_matrix(const tdk::OperatorWindow& window) {
    std::cerr << window.source << " (" << window.dim() << "x" << window.dim() << ")\n";
    for (int i = 0; i < window.dim(); ++i) {
        for (int j = 0; j < window.dim(); ++j) {
            const tdk::Complex v = window.entries(i, j);
            char buf[64];
            if (std::abs(v.imag()) < 1e-12) {
                std::snprintf(buf, sizeof(buf), "%10.4f", v.real());
            } else {
                std::snprintf(buf, sizeof(buf), "%9.3f%+.3fi", v.real(), v.imag());
            }
            std::cerr << buf;
        }
        std::cerr << "\n";
    }
}

int run_validate(const std::string& path) {
    const tdk::KernelSpec spec = tdk::load_spec(path);
    const tdk::ValidationReport report = tdk::validate_spec(spec);
    emit(tdk::to_json(report));
    return kExitOk;
}

int run_matrix(const std::string& path, const std::string& op, int power, int dim,
               bool pretty) {
    const tdk::KernelSpec spec = tdk::load_spec(path);
    tdk::OperatorWindow window;
    if (op == "mz") {
        window = tdk::mz_window(spec, dim);
    } else if (op == "mzadj") {
        window = tdk::mz_adjoint_window(spec, dim);
    } else if (op == "l") {
        window = tdk::left_inverse_window(spec, dim);
    } else if (op == "ladj") {
        window = tdk::left_inverse_adjoint_window(spec, dim);
    } else if (op == "lp") {
        window = tdk::lp_window(spec, power, dim);
    } else if (op == "lpadj") {
        window = tdk::lp_adjoint_window(spec, power, dim);
    } else if (op == "modinvsq") {
        window = tdk::modulus_inv_sq_window(spec, dim);
    } else if (op == "modinv") {
        window = tdk::hermitian_sqrt(tdk::modulus_inv_sq_window(spec, dim));
        window.source = "ModInv";
    } else if (op == "modsqrt") {
        const tdk::AluthgeData data = tdk::aluthge_data(spec, dim);
        window = data.mod_sqrt;
    } else {
        throw CLI::ValidationError("--op", "unknown operator " + op);
    }
    if (pretty) pretty_matrix(window);
    emit(tdk::to_json(window));
    return kExitOk;
}

int run_shimorin(const std::string& path, int max_index) {
    const tdk::KernelSpec spec = tdk::load_spec(path);
    const tdk::CoefficientTable table = tdk::shimorin_coeffs(spec, max_index);
    const tdk::TridiagonalVerdict verdict = tdk::shimorin_tridiagonal_verdict(spec, max_index);
    json out = tdk::to_json(table);
    out["verdict"] = tdk::to_json(verdict);
    emit(out);
    return verdict.numeric.indeterminate() ? kExitIndeterminate : kExitOk;
}

int run_aluthge(const std::string& path, const std::string& kernel, int max_index) {
    const tdk::KernelSpec spec = tdk::load_spec(path);
    tdk::CoefficientTable table;
    json out;
    if (kernel == "shimorin") {
        table = tdk::shimorin_aluthge_coeffs(spec, max_index);
        const tdk::CVector f = tdk::rank_one_f_vector(spec, 4 * max_index + 8);
        out = tdk::to_json(table);
        out["F_norm"] = f.norm();
    } else if (kernel == "standard") {
        table = tdk::standard_aluthge_coeffs(spec, max_index);
        out = tdk::to_json(table);
    } else {
        throw CLI::ValidationError("--kernel", "unknown kernel " + kernel);
    }
    const tdk::Verdict offband = tdk::offband_verdict(table.X);
    out["offband"] = tdk::to_json(offband);
    emit(out);
    return offband.indeterminate() ? kExitIndeterminate : kExitOk;
}

int run_classify(const std::string& path, const std::string& test,
                 const std::string& op, int dim) {
    const tdk::KernelSpec spec = tdk::load_spec(path);
    if (test == "quasinormal") {
        const tdk::QuasinormalReport report = tdk::quasinormal_test(spec, dim);
        emit(tdk::to_json(report));
        return report.verdict.indeterminate() ? kExitIndeterminate : kExitOk;
    }
    if (test == "positive") {
        const tdk::AluthgeData data = tdk::aluthge_data(spec, dim);
        const tdk::OperatorWindow& p =
            op == "modinvsq" ? data.mod_inv_sq : data.mod_inv;
        const tdk::CriterionResult result =
            tdk::positive_kernel_criterion(p, spec, dim - 2);
        json out = tdk::to_json(result);
        out["operator"] = p.source;
        emit(out);
        return result.verdict.indeterminate() ? kExitIndeterminate : kExitOk;
    }
    if (test == "truncated") {
        const tdk::CriterionResult result = tdk::truncated_sa_criterion(spec);
        emit(tdk::to_json(result));
        return result.verdict.indeterminate() ? kExitIndeterminate : kExitOk;
    }
    throw CLI::ValidationError("--test", "unknown test " + test);
}

bool close_to(double value, double target, double tol) {
    return std::abs(value - target) <= tol;
}

int run_example(const std::string& name) {
    json out;
    out["name"] = name;
    bool ok = true;

    if (name == "sec4") {
        const tdk::KernelSpec spec({{1, 0}}, {{0.5, 0}});
        const tdk::CoefficientTable table = tdk::shimorin_coeffs(spec, 8);
        const tdk::TridiagonalVerdict verdict = tdk::shimorin_tridiagonal_verdict(spec, 8);
        const double x13 = std::abs(table.X(1, 3));
        out["X_13"] = x13;
        out["verdict"] = tdk::to_json(verdict);
        ok = close_to(x13, 0.25, 1e-12) && verdict.criterion.fails() &&
             verdict.numeric.fails() && verdict.agree();
    } else if (name == "sec5") {
        const tdk::KernelSpec spec({{1, 0}}, {{0.5, 0}});
        const tdk::OperatorWindow inv_sq = tdk::modulus_inv_sq_window(spec, 6);
        const tdk::OperatorWindow inv = tdk::hermitian_sqrt(inv_sq);
        const tdk::CoefficientTable table = tdk::standard_aluthge_coeffs(spec, 8);
        const double alpha = inv.entries(0, 0).real();
        const double beta = inv.entries(0, 1).real();
        const double offband = tdk::offband_max(table.X).magnitude;
        out["mod_inv_sq_block"] = {
            {tdk::to_json(inv_sq.entries(0, 0)), tdk::to_json(inv_sq.entries(0, 1))},
            {tdk::to_json(inv_sq.entries(1, 0)), tdk::to_json(inv_sq.entries(1, 1))}};
        out["alpha_half_plus_beta"] = alpha / 2 + beta;
        out["offband_max"] = offband;
        ok = close_to(inv_sq.entries(0, 0).real(), 1.0, 1e-12) &&
             close_to(inv_sq.entries(0, 1).real(), -0.5, 1e-12) &&
             close_to(inv_sq.entries(1, 1).real(), 1.25, 1e-12) &&
             std::abs(alpha / 2 + beta) > 1e-6 && offband < 1e-10 &&
             close_to(std::abs(table.X(0, 1)), std::abs(alpha / 2 + beta), 1e-10);
    } else if (name == "sec9") {
        const tdk::KernelSpec spec({{1, 0}, {1, 0}}, {{1, 0}, {1, 0}});
        const tdk::AluthgeData data = tdk::aluthge_data(spec, 16);
        const tdk::CoefficientTable sa = tdk::shimorin_aluthge_coeffs(spec, 8);
        const tdk::CoefficientTable standard = tdk::standard_aluthge_coeffs(spec, 8);
        const double corner = data.mod_inv.entries(1, 2).real();
        const double f_norm = data.f_vector.norm();
        const double x13 = std::abs(sa.X(1, 3));
        const double std_offband = tdk::offband_max(standard.X).magnitude;
        const double inv_sqrt5 = 1.0 / std::sqrt(5.0);
        out["mod_inv_corner"] = corner;
        out["F_norm"] = f_norm;
        out["tilde_X_13_abs"] = x13;
        out["standard_offband_max"] = std_offband;
        out["standard_tridiagonal"] = std_offband < 1e-10;
        out["shimorin_aluthge_tridiagonal"] = x13 < 1e-10;
        ok = close_to(corner, -inv_sqrt5, 1e-10) && f_norm < 1e-12 &&
             close_to(x13, inv_sqrt5, 1e-9) && std_offband < 1e-10;
    } else {
        throw CLI::ValidationError("--name", "unknown example " + name);
    }

    out["ok"] = ok;
    emit(out);
    return ok ? kExitOk : kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifts on tridiagonal reproducing kernel spaces"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string op = "mz";
    std::string positive_op = "modinv";
    std::string kernel = "shimorin";
    std::string test = "quasinormal";
    std::string example_name;
    int power = 2;
    int dim = 8;
    int max_index = 8;
    bool pretty = false;

    CLI::App* validate = app.add_subcommand("validate", "check the defining sequences");
    validate->add_option("spec", spec_path)->required();

    CLI::App* matrix = app.add_subcommand("matrix", "emit an operator window");
    matrix->add_option("spec", spec_path)->required();
    matrix->add_option("--op", op, "mz|mzadj|l|ladj|lp|lpadj|modinvsq|modinv|modsqrt");
    matrix->add_option("--p", power, "power for lp/lpadj");
    matrix->add_option("--dim", dim, "window dimension");
    matrix->add_flag("--pretty", pretty, "pretty-print to stderr");

    CLI::App* shimorin = app.add_subcommand("shimorin", "model-kernel coefficient table");
    shimorin->add_option("spec", spec_path)->required();
    shimorin->add_option("--max", max_index, "largest table index");

    CLI::App* aluthge = app.add_subcommand("aluthge", "transformed-shift kernel tables");
    aluthge->add_option("spec", spec_path)->required();
    aluthge->add_option("--kernel", kernel, "shimorin|standard");
    aluthge->add_option("--max", max_index, "largest table index");

    CLI::App* classify = app.add_subcommand("classify", "classification criteria");
    classify->add_option("spec", spec_path)->required();
    classify->add_option("--test", test, "quasinormal|positive|truncated");
    classify->add_option("--operator", positive_op, "positive test operator: modinv|modinvsq");
    classify->add_option("--dim", dim, "window dimension");

    CLI::App* examples = app.add_subcommand("examples", "recompute a bundled worked example");
    examples->add_option("--name", example_name, "sec4|sec5|sec9")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return run_validate(spec_path);
        if (matrix->parsed()) return run_matrix(spec_path, op, power, dim, pretty);
        if (shimorin->parsed()) return run_shimorin(spec_path, max_index);
        if (aluthge->parsed()) return run_aluthge(spec_path, kernel, max_index);
        if (classify->parsed()) return run_classify(spec_path, test, positive_op, dim);
        if (examples->parsed()) return run_example(example_name);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const tdk::NonzeroViolation& e) {
        std::cerr << "rejected: " << e.what() << std::endl;
        return kExitRejected;
    } catch (const tdk::NotLeftInvertible& e) {
        std::cerr << "rejected: " << e.what() << std::endl;
        return kExitRejected;
    } catch (const tdk::NotTruncated& e) {
        std::cerr << "rejected: " << e.what() << std::endl;
        return kExitRejected;
    } catch (const tdk::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitBadInput;
    }
    return kExitUsage;
}
