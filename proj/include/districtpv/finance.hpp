#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "districtpv/dispatch.hpp"

namespace districtpv {

struct FinanceParams {
    int project_years = 25;
    double discount_rate = 0.03;
    double capital_cost_per_w = 2.15;    // $/W-DC installed
    double maintenance_per_kw_yr = 31.4; // $/kW/yr, inverter replacement folded in
    double buy_price_per_kwh = 0.15;
    double sell_price_per_kwh = 0.08;
    double emission_factor_kg_per_kwh = 0.455;
    std::string currency_note = "110 JPY/USD";

    static FinanceParams preset_2018();
    static FinanceParams preset_2030(); // capital cost 0.88 $/W, rest shared

    void validate() const; // throws ValidationError
};

// Year-indexed cash flows of a PV system against a grid-only baseline.
// cash_flow[n] = buy*self_consumed_n + sell*exported_n - maintenance;
// generation degrades geometrically and the hourly balance is recomputed
// against the fixed year-1 demand.
struct CashFlows {
    double system_cost = 0.0;             // C0 = capital * capacity * 1000
    std::vector<double> cash_flow;        // [0] is project year 1
    std::vector<double> energy_kwh;       // Q_n
    std::vector<double> self_consumed_kwh;
    std::vector<double> exported_kwh;
    std::vector<double> cumulative;       // running undiscounted sum of cash_flow
};

struct FinanceResult {
    double npv = 0.0;
    std::optional<int> payback_years; // empty when never recovered within N
    double lcoe_per_kwh = 0.0;
    double cost_saving_pct = 0.0;
    double annual_base_cost = 0.0;    // year-1 demand * buy price
    std::string currency_note;        // exchange-rate metadata, never computed with
};

CashFlows cash_flow_schedule(const BalanceSeries& balance_year1, double capacity_kw,
                             const FinanceParams& p, double degradation_per_year);

// Sum of discounted cash flows minus the initial system cost.
double npv(const CashFlows& cf, double discount_rate);

// First year whose cumulative undiscounted cash flow covers the system
// cost; empty when that never happens within the project period.
std::optional<int> payback(const CashFlows& cf);

// (C0 + discounted maintenance) / discounted generation.
double lcoe(const CashFlows& cf, double discount_rate, double maintenance_per_year);

// (npv / years) / annual baseline electricity cost, as a percentage.
double cost_saving(double npv_value, int project_years, double annual_base_cost);

// Full indicator set for one system.
FinanceResult evaluate_finance(const BalanceSeries& balance_year1, double capacity_kw,
                               const FinanceParams& p, double degradation_per_year);

struct SweepPoint {
    double capacity_kw;
    double npv;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    double best_capacity_kw = 0.0;
    double best_npv = 0.0;
    bool profitable = false; // false when NPV <= 0 across the whole grid
};

// Evaluates NPV on {step, 2*step, ..., cap_max} (cap_max appended when not
// a multiple) and returns the argmax, ties broken toward smaller capacity.
SweepResult capacity_sweep(const std::function<BalanceSeries(double)>& balance_factory,
                           const FinanceParams& p, double degradation_per_year,
                           double cap_max_kw, double step_kw);

} // namespace districtpv
