#include "districtpv/dispatch.hpp"

#include <algorithm>

#include "districtpv/errors.hpp"

namespace districtpv {

BalanceSeries hourly_balance(const std::vector<double>& demand_kwh,
                             const std::vector<double>& generation_kwh) {
    if (demand_kwh.size() != generation_kwh.size())
        throw ShapeError("demand and generation series differ in length", demand_kwh.size(),
                         generation_kwh.size());

    const std::size_t n = demand_kwh.size();
    BalanceSeries b;
    b.demand_kwh = demand_kwh;
    b.generation_kwh = generation_kwh;
    b.self_consumed_kwh.resize(n);
    b.exported_kwh.resize(n);
    b.imported_kwh.resize(n);

    for (std::size_t h = 0; h < n; ++h) {
        const double gen = generation_kwh[h];
        const double dem = demand_kwh[h];
        const double self = std::min(gen, dem);
        b.self_consumed_kwh[h] = self;
        b.exported_kwh[h] = gen - self;
        b.imported_kwh[h] = dem - self;

        b.annual_generation_kwh += gen;
        b.annual_demand_kwh += dem;
        b.annual_self_consumed_kwh += self;
        b.annual_exported_kwh += gen - self;
        b.annual_imported_kwh += dem - self;
    }
    return b;
}

EnergyIndicators energy_indicators(const BalanceSeries& b, double emission_factor_kg_per_kwh) {
    if (b.annual_demand_kwh <= 0.0)
        throw DomainError("energy indicators require positive annual demand");

    EnergyIndicators ind;
    ind.energy_sufficiency_pct = b.annual_generation_kwh / b.annual_demand_kwh * 100.0;
    ind.self_sufficiency_pct = b.annual_self_consumed_kwh / b.annual_demand_kwh * 100.0;
    if (b.annual_generation_kwh > 0.0) {
        ind.self_consumption_pct = b.annual_self_consumed_kwh / b.annual_generation_kwh * 100.0;
    } else {
        ind.self_consumption_pct = 100.0;
        ind.self_consumption_vacuous = true;
    }
    ind.co2_base_kg = b.annual_demand_kwh * emission_factor_kg_per_kwh;
    ind.co2_with_system_kg = b.annual_imported_kwh * emission_factor_kg_per_kwh;
    ind.co2_reduction_pct = (1.0 - b.annual_imported_kwh / b.annual_demand_kwh) * 100.0;
    return ind;
}

} // namespace districtpv
