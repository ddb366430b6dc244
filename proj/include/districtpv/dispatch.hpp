#pragma once

#include <vector>

namespace districtpv {

// Hourly generation/demand ledger. Per hour: self_consumed = min(gen,
// demand), exported = gen - self, imported = demand - self, so
// gen + imported == demand + exported holds exactly.
struct BalanceSeries {
    std::vector<double> generation_kwh;
    std::vector<double> demand_kwh;
    std::vector<double> self_consumed_kwh;
    std::vector<double> exported_kwh;
    std::vector<double> imported_kwh;

    double annual_generation_kwh = 0.0;
    double annual_demand_kwh = 0.0;
    double annual_self_consumed_kwh = 0.0;
    double annual_exported_kwh = 0.0;
    double annual_imported_kwh = 0.0;
};

struct EnergyIndicators {
    double energy_sufficiency_pct = 0.0;  // annual generation / annual demand
    double self_sufficiency_pct = 0.0;    // annual self-consumed / annual demand
    double self_consumption_pct = 0.0;    // annual self-consumed / annual generation
    double co2_reduction_pct = 0.0;
    double co2_base_kg = 0.0;
    double co2_with_system_kg = 0.0;
    // True when self-consumption is the 100% vacuous-default of a system
    // with no generation at all.
    bool self_consumption_vacuous = false;
};

BalanceSeries hourly_balance(const std::vector<double>& demand_kwh,
                             const std::vector<double>& generation_kwh);

// ES, SS, SC, and CO2 accounting against a grid-only baseline. SC of a
// zero-generation system is reported as 100 (and flagged) so the identity
// SS = ES*SC/100 stays total.
EnergyIndicators energy_indicators(const BalanceSeries& b, double emission_factor_kg_per_kwh);

} // namespace districtpv
