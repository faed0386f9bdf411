#include "tdk/json_io.hpp"

#include <fstream>

namespace tdk {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j, const char* what) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex{j[0].get<double>(), j[1].get<double>()};
    }
    throw Error(std::string(what) + ": expected a number or [re, im]");
}

std::vector<Complex> complex_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + ": expected an array");
    std::vector<Complex> values;
    values.reserve(j.size());
    for (const auto& item : j) values.push_back(complex_from_json(item, what));
    return values;
}

const char* verdict_name(Verdict::State state) {
    switch (state) {
        case Verdict::State::holds: return "true";
        case Verdict::State::fails: return "false";
        default: return "indeterminate";
    }
}

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

KernelSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a")) {
        throw Error("spec: expected an object with an \"a\" array");
    }
    std::vector<Complex> a = complex_list(j.at("a"), "a");
    std::vector<Complex> b;
    if (j.contains("b")) b = complex_list(j.at("b"), "b");
    TailRule tail;
    if (j.contains("tail")) {
        const json& t = j.at("tail");
        if (!t.is_object() || !t.contains("rho")) {
            throw Error("tail: expected {\"rho\": ...}");
        }
        tail.rho = complex_from_json(t.at("rho"), "rho");
    }
    return KernelSpec(std::move(a), std::move(b), tail);
}

KernelSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file: " + path);
    json j = json::parse(in);  // propagates nlohmann parse_error
    return spec_from_json(j);
}

json to_json(Complex value) {
    return json::array({value.real(), value.imag()});
}

json to_json(const ValidationReport& report) {
    return json{{"all_nonzero", report.all_nonzero},
                {"sup_ratio", report.sup_ratio},
                {"limsup_b_ratio", report.limsup_b_ratio},
                {"prefix_b_ratio_max", report.prefix_b_ratio_max},
                {"bounded_below", report.bounded_below},
                {"sup_finite", report.sup_finite},
                {"limsup_below_one", report.limsup_below_one},
                {"bounded_away", report.bounded_away},
                {"semi_analytic", report.semi_analytic},
                {"analytic", report.analytic},
                {"polynomials_assumed", report.polynomials_assumed}};
}

json to_json(const OperatorWindow& window) {
    return json{{"dim", window.dim()},
                {"entries", matrix_to_json(window.entries)},
                {"source", window.source},
                {"exactness", window.exactness == Exactness::closed_form
                                  ? "closed_form"
                                  : "truncated"}};
}

json to_json(const Verdict& verdict) {
    json j{{"value", verdict_name(verdict.state)}, {"tolerance", verdict.tolerance}};
    if (verdict.witness) {
        j["witness"] = json{{"m", verdict.witness->m},
                            {"n", verdict.witness->n},
                            {"magnitude", verdict.witness->magnitude}};
    }
    return j;
}

json to_json(const CoefficientTable& table) {
    return json{{"M", table.max_index()},
                {"X", matrix_to_json(table.X)},
                {"basis", table.basis},
                {"doubling_residual", table.doubling_residual}};
}

json to_json(const TridiagonalVerdict& verdict) {
    return json{{"criterion", to_json(verdict.criterion)},
                {"numeric", to_json(verdict.numeric)},
                {"offband_magnitude", verdict.offband_magnitude},
                {"agree", verdict.agree()}};
}

json to_json(const CriterionResult& result) {
    return json{{"verdict", to_json(result.verdict)},
                {"recurrence_residual", result.recurrence_residual},
                {"offband_magnitude", result.offband_magnitude},
                {"channels_agree", result.channels_agree}};
}

json to_json(const QuasinormalReport& report) {
    json j = to_json(report.verdict);
    j["r"] = report.r;
    j["residual"] = report.residual;
    j["channels_agree"] = report.channels_agree;
    return j;
}

}  // namespace tdk
