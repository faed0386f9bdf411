#pragma once

#include <json.hpp>

#include "tdk/classify.hpp"
#include "tdk/kernel_spec.hpp"
#include "tdk/shimorin.hpp"
#include "tdk/verdict.hpp"
#include "tdk/window.hpp"

namespace tdk {

/// Accepts {"a": [...], "b": [...], "tail": {"rho": ...}}; scalars are plain
/// numbers or [re, im] pairs; "b" and "tail" are optional.
KernelSpec spec_from_json(const nlohmann::json& j);

KernelSpec load_spec(const std::string& path);

nlohmann::json to_json(Complex value);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const OperatorWindow& window);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const CoefficientTable& table);
nlohmann::json to_json(const TridiagonalVerdict& verdict);
nlohmann::json to_json(const CriterionResult& result);
nlohmann::json to_json(const QuasinormalReport& report);

}  // namespace tdk
