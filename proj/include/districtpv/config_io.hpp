#pragma once

#include <string>

#include "districtpv/demand.hpp"
#include "districtpv/finance.hpp"
#include "districtpv/geometry.hpp"

namespace districtpv {

// All configuration files share one JSON dialect with a schema_version
// field. Loaders throw IoError for filesystem problems and ParseError /
// ValidationError for malformed content.

ScenarioSpec load_scenario(const std::string& path);
std::string scenario_to_json(const ScenarioSpec& s);

DemandParams load_demand_params(const std::string& path);
void save_demand_params(const DemandParams& p, const std::string& path);
std::string demand_params_to_json(const DemandParams& p);

DemandTargets load_demand_targets(const std::string& path);

FinanceParams load_finance_params(const std::string& path);

// "2018" and "2030" are built in; anything else throws UsageError.
FinanceParams finance_preset(const std::string& name);

} // namespace districtpv
