#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "archslice/model.hpp"

namespace archslice {

nlohmann::json to_json_value(const ProcessExpr& process);
nlohmann::json to_json_value(const Specification& spec);
nlohmann::json to_json_value(const std::vector<Diagnostic>& diagnostics);

}  // namespace archslice
