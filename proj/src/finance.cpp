#include "districtpv/finance.hpp"

#include <algorithm>
#include <cmath>

#include "districtpv/errors.hpp"

namespace districtpv {

FinanceParams FinanceParams::preset_2018() { return FinanceParams{}; }

FinanceParams FinanceParams::preset_2030() {
    FinanceParams p;
    p.capital_cost_per_w = 0.88;
    return p;
}

void FinanceParams::validate() const {
    std::string bad;
    if (project_years < 1) bad += " project years";
    if (discount_rate < 0.0 || discount_rate >= 1.0) bad += " discount rate";
    if (capital_cost_per_w < 0.0) bad += " capital cost";
    if (maintenance_per_kw_yr < 0.0) bad += " maintenance cost";
    if (buy_price_per_kwh < 0.0) bad += " buy price";
    if (sell_price_per_kwh < 0.0) bad += " sell price";
    if (emission_factor_kg_per_kwh < 0.0) bad += " emission factor";
    if (!bad.empty()) throw ValidationError("invalid finance params:" + bad);
}

CashFlows cash_flow_schedule(const BalanceSeries& balance_year1, double capacity_kw,
                             const FinanceParams& p, double degradation_per_year) {
    p.validate();
    CashFlows cf;
    cf.system_cost = p.capital_cost_per_w * capacity_kw * 1000.0;
    cf.cash_flow.reserve(static_cast<std::size_t>(p.project_years));

    const std::size_t n_hours = balance_year1.generation_kwh.size();
    double running = 0.0;
    for (int year = 1; year <= p.project_years; ++year) {
        const double scale = std::pow(1.0 - degradation_per_year, year - 1);
        double gen = 0.0, self = 0.0, exported = 0.0;
        for (std::size_t h = 0; h < n_hours; ++h) {
            const double g = balance_year1.generation_kwh[h] * scale;
            const double d = balance_year1.demand_kwh[h];
            const double s = std::min(g, d);
            gen += g;
            self += s;
            exported += g - s;
        }
        const double flow = p.buy_price_per_kwh * self + p.sell_price_per_kwh * exported -
                            p.maintenance_per_kw_yr * capacity_kw;
        running += flow;
        cf.cash_flow.push_back(flow);
        cf.energy_kwh.push_back(gen);
        cf.self_consumed_kwh.push_back(self);
        cf.exported_kwh.push_back(exported);
        cf.cumulative.push_back(running);
    }
    return cf;
}

double npv(const CashFlows& cf, double discount_rate) {
    double sum = 0.0;
    double factor = 1.0;
    for (double flow : cf.cash_flow) {
        factor /= 1.0 + discount_rate;
        sum += flow * factor;
    }
    return sum - cf.system_cost;
}

std::optional<int> payback(const CashFlows& cf) {
    for (std::size_t i = 0; i < cf.cumulative.size(); ++i)
        if (cf.cumulative[i] >= cf.system_cost) return static_cast<int>(i) + 1;
    return std::nullopt;
}

double lcoe(const CashFlows& cf, double discount_rate, double maintenance_per_year) {
    double cost = cf.system_cost;
    double energy = 0.0;
    double factor = 1.0;
    for (std::size_t i = 0; i < cf.energy_kwh.size(); ++i) {
        factor /= 1.0 + discount_rate;
        cost += maintenance_per_year * factor;
        energy += cf.energy_kwh[i] * factor;
    }
    if (energy <= 0.0) throw DomainError("LCOE requires nonzero discounted generation");
    return cost / energy;
}

double cost_saving(double npv_value, int project_years, double annual_base_cost) {
    if (annual_base_cost <= 0.0)
        throw DomainError("cost saving requires a positive baseline cost");
    return npv_value / project_years / annual_base_cost * 100.0;
}

FinanceResult evaluate_finance(const BalanceSeries& balance_year1, double capacity_kw,
                               const FinanceParams& p, double degradation_per_year) {
    const CashFlows cf = cash_flow_schedule(balance_year1, capacity_kw, p, degradation_per_year);
    FinanceResult r;
    r.npv = npv(cf, p.discount_rate);
    r.payback_years = payback(cf);
    r.lcoe_per_kwh = lcoe(cf, p.discount_rate, p.maintenance_per_kw_yr * capacity_kw);
    r.annual_base_cost = balance_year1.annual_demand_kwh * p.buy_price_per_kwh;
    r.cost_saving_pct = cost_saving(r.npv, p.project_years, r.annual_base_cost);
    r.currency_note = p.currency_note;
    return r;
}

SweepResult capacity_sweep(const std::function<BalanceSeries(double)>& balance_factory,
                           const FinanceParams& p, double degradation_per_year,
                           double cap_max_kw, double step_kw) {
    if (cap_max_kw <= 0.0 || step_kw <= 0.0)
        throw DomainError("sweep requires positive capacity bound and step");

    std::vector<double> grid;
    for (double c = step_kw; c < cap_max_kw - 1e-9; c += step_kw) grid.push_back(c);
    grid.push_back(cap_max_kw);

    SweepResult sweep;
    sweep.points.reserve(grid.size());
    bool first = true;
    for (double capacity : grid) {
        const BalanceSeries balance = balance_factory(capacity);
        const CashFlows cf = cash_flow_schedule(balance, capacity, p, degradation_per_year);
        const double value = npv(cf, p.discount_rate);
        sweep.points.push_back({capacity, value});
        if (first || value > sweep.best_npv) {
            sweep.best_npv = value;
            sweep.best_capacity_kw = capacity;
            first = false;
        }
    }
    sweep.profitable = sweep.best_npv > 0.0;
    return sweep;
}

} // namespace districtpv
