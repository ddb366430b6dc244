#pragma once

#include <map>
#include <string>
#include <vector>

#include "districtpv/demand.hpp"
#include "districtpv/dispatch.hpp"
#include "districtpv/finance.hpp"
#include "districtpv/geometry.hpp"
#include "districtpv/solar_pv.hpp"
#include "districtpv/weather.hpp"

namespace districtpv {

struct RunConfig {
    std::string weather_path;
    std::vector<std::string> scenario_paths;
    std::vector<std::string> finance_presets = {"2018", "2030"};
    std::string finance_params_path; // replaces the presets when set
    std::string demand_params_path;  // explicit params ...
    std::string targets_path;        // ... or calibration targets (first scenario)
    std::string output_dir = ".";
    bool write_csv = true;
    bool write_json = true;
    bool plots = false;
    PvArraySpec array; // capacity ignored; tilt/azimuth/loss/degradation apply
};

// Everything loaded once and shared read-only across scenario runs.
struct RunContext {
    WeatherYear weather;
    DemandParams demand_params;
    std::map<std::string, FinanceParams> finance; // preset name -> params
    PvArraySpec array_template;
};

struct ScenarioResult {
    std::string name;
    DistrictMetrics metrics;
    DemandBreakdown demand;
    double unit_floor_consumption_kwh_m2 = 0.0;
    double generation_annual_kwh = 0.0;
    double specific_yield_kwh_per_kw = 0.0;
    EnergyIndicators indicators;
    BalanceSeries balance; // year 1, hourly
    std::map<std::string, FinanceResult> finance;
    std::map<std::string, CashFlows> cash_flows;
    PvArraySpec array; // as evaluated (capacity = rooftop maximum)
};

// Builds the shared context: parses weather, resolves demand parameters
// (explicit file beats calibration beats library defaults; calibration runs
// against the first scenario), and resolves finance presets.
RunContext build_context(const RunConfig& cfg);

// geometry -> demand -> generation at the rooftop maximum -> balance ->
// indicators -> finance for every configured preset.
ScenarioResult run_scenario(const RunContext& ctx, const ScenarioSpec& scenario);

// All scenarios of the config; evaluation is parallel across scenarios.
std::vector<ScenarioResult> run_all(const RunConfig& cfg);

struct ComparisonRow {
    std::string label;
    std::vector<double> values; // one per scenario
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
};

struct ComparisonTable {
    std::vector<std::string> scenario_names;
    std::vector<ComparisonRow> rows;
};

// Indicator-per-row comparison with mean and sample-deviation columns.
// Requires at least two results.
ComparisonTable compare(const std::vector<ScenarioResult>& results);

std::string comparison_to_csv(const ComparisonTable& table);
std::string comparison_to_text(const ComparisonTable& table);

std::string results_to_json(const std::vector<ScenarioResult>& results);
std::string balance_to_csv(const BalanceSeries& balance);

// Writes scenario_results.json, comparison.csv (two or more scenarios),
// balance_<name>.csv per scenario, and the two SVG charts per scenario when
// plotting is enabled. Returns the paths written.
std::vector<std::string> emit_outputs(const std::vector<ScenarioResult>& results,
                                      const RunConfig& cfg);

} // namespace districtpv
