#include "districtpv/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>

#include <json.hpp>

#include "districtpv/calendar.hpp"
#include "districtpv/config_io.hpp"
#include "districtpv/errors.hpp"
#include "districtpv/svg_chart.hpp"

namespace districtpv {

namespace {

using nlohmann::json;

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::vector<double> monthly_sums(const std::vector<double>& hourly) {
    std::vector<double> sums(12, 0.0);
    int h = 0;
    for (int m = 0; m < 12; ++m)
        for (int d = 0; d < calendar::days_in_month[static_cast<std::size_t>(m)]; ++d)
            for (int k = 0; k < 24; ++k, ++h)
                if (h < static_cast<int>(hourly.size()))
                    sums[static_cast<std::size_t>(m)] += hourly[static_cast<std::size_t>(h)];
    return sums;
}

} // namespace

RunContext build_context(const RunConfig& cfg) {
    RunContext ctx;
    ctx.weather = parse_epw_file(cfg.weather_path).weather;
    ctx.array_template = cfg.array;

    if (!cfg.finance_params_path.empty()) {
        ctx.finance["custom"] = load_finance_params(cfg.finance_params_path);
    } else {
        for (const auto& preset : cfg.finance_presets)
            ctx.finance[preset] = finance_preset(preset);
    }

    if (!cfg.demand_params_path.empty()) {
        ctx.demand_params = load_demand_params(cfg.demand_params_path);
    } else if (!cfg.targets_path.empty()) {
        if (cfg.scenario_paths.empty())
            throw UsageError("calibration requires at least one scenario");
        const ScenarioSpec reference = load_scenario(cfg.scenario_paths.front());
        ctx.demand_params = calibrate(derive_metrics(reference), ctx.weather,
                                      load_demand_targets(cfg.targets_path));
    } else {
        ctx.demand_params = DemandParams{};
    }
    return ctx;
}

ScenarioResult run_scenario(const RunContext& ctx, const ScenarioSpec& scenario) {
    ScenarioResult result;
    result.name = scenario.name;
    result.metrics = derive_metrics(scenario);

    const DemandSeries demand = synthesize_demand(result.metrics, ctx.weather, ctx.demand_params);
    result.demand = annual_breakdown(demand);
    result.unit_floor_consumption_kwh_m2 = demand.unit_floor_consumption_kwh_m2;

    PvArraySpec array = ctx.array_template;
    array.capacity_kw = result.metrics.max_pv_capacity_kw;
    result.array = array;

    const GenerationSeries generation = generation_series(ctx.weather, array);
    result.generation_annual_kwh = generation.annual_kwh;
    result.specific_yield_kwh_per_kw = generation.specific_yield_kwh_per_kw;

    result.balance = hourly_balance(demand.total_series(), generation.hourly_kwh);

    const double emission_factor = ctx.finance.empty()
                                       ? FinanceParams{}.emission_factor_kg_per_kwh
                                       : ctx.finance.begin()->second.emission_factor_kg_per_kwh;
    result.indicators = energy_indicators(result.balance, emission_factor);

    for (const auto& [preset, params] : ctx.finance) {
        CashFlows cf = cash_flow_schedule(result.balance, array.capacity_kw, params,
                                          array.degradation_per_year);
        FinanceResult fin;
        fin.npv = npv(cf, params.discount_rate);
        fin.payback_years = payback(cf);
        fin.lcoe_per_kwh = lcoe(cf, params.discount_rate,
                                params.maintenance_per_kw_yr * array.capacity_kw);
        fin.annual_base_cost = result.balance.annual_demand_kwh * params.buy_price_per_kwh;
        fin.cost_saving_pct = cost_saving(fin.npv, params.project_years, fin.annual_base_cost);
        fin.currency_note = params.currency_note;
        result.finance[preset] = fin;
        result.cash_flows[preset] = std::move(cf);
    }
    return result;
}

std::vector<ScenarioResult> run_all(const RunConfig& cfg) {
    if (cfg.scenario_paths.empty()) throw UsageError("no scenarios given");
    const RunContext ctx = build_context(cfg);

    std::vector<ScenarioSpec> scenarios;
    scenarios.reserve(cfg.scenario_paths.size());
    for (const auto& path : cfg.scenario_paths) scenarios.push_back(load_scenario(path));

    std::vector<std::future<ScenarioResult>> futures;
    futures.reserve(scenarios.size());
    for (const auto& s : scenarios)
        futures.push_back(std::async(std::launch::async,
                                     [&ctx, &s] { return run_scenario(ctx, s); }));

    std::vector<ScenarioResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

namespace {

template <typename Extract>
void add_row(ComparisonTable& table, const std::string& label,
             const std::vector<ScenarioResult>& results, Extract&& extract) {
    ComparisonRow row;
    row.label = label;
    row.values.reserve(results.size());
    for (const auto& r : results) row.values.push_back(extract(r));
    double sum = 0.0;
    for (double v : row.values) sum += v;
    row.mean = sum / static_cast<double>(row.values.size());
    double sq = 0.0;
    for (double v : row.values) sq += (v - row.mean) * (v - row.mean);
    row.stddev = row.values.size() > 1
                     ? std::sqrt(sq / static_cast<double>(row.values.size() - 1))
                     : 0.0;
    table.rows.push_back(std::move(row));
}

} // namespace

ComparisonTable compare(const std::vector<ScenarioResult>& results) {
    if (results.size() < 2) throw UsageError("comparison requires at least two scenarios");

    ComparisonTable t;
    for (const auto& r : results) t.scenario_names.push_back(r.name);

    add_row(t, "building_count", results,
            [](const ScenarioResult& r) { return static_cast<double>(r.metrics.building_count); });
    add_row(t, "average_height_m", results,
            [](const ScenarioResult& r) { return r.metrics.average_height_m; });
    add_row(t, "floor_area_m2", results,
            [](const ScenarioResult& r) { return r.metrics.total_floor_area_m2; });
    add_row(t, "far_pct", results, [](const ScenarioResult& r) { return r.metrics.far_pct; });
    add_row(t, "bcr_pct", results, [](const ScenarioResult& r) { return r.metrics.bcr_pct; });
    add_row(t, "volume_m3", results,
            [](const ScenarioResult& r) { return r.metrics.total_volume_m3; });
    add_row(t, "above_ground_surface_m2", results,
            [](const ScenarioResult& r) { return r.metrics.above_ground_surface_m2; });
    add_row(t, "surface_to_volume", results,
            [](const ScenarioResult& r) { return r.metrics.surface_to_volume; });
    add_row(t, "rooftop_area_m2", results,
            [](const ScenarioResult& r) { return r.metrics.rooftop_area_m2; });
    add_row(t, "max_pv_capacity_kw", results,
            [](const ScenarioResult& r) { return r.metrics.max_pv_capacity_kw; });

    add_row(t, "lighting_gwh", results,
            [](const ScenarioResult& r) { return r.demand.lighting_kwh / 1e6; });
    add_row(t, "equipment_gwh", results,
            [](const ScenarioResult& r) { return r.demand.equipment_kwh / 1e6; });
    add_row(t, "heating_gwh", results,
            [](const ScenarioResult& r) { return r.demand.heating_kwh / 1e6; });
    add_row(t, "cooling_gwh", results,
            [](const ScenarioResult& r) { return r.demand.cooling_kwh / 1e6; });
    add_row(t, "total_demand_gwh", results,
            [](const ScenarioResult& r) { return r.demand.total_kwh / 1e6; });
    add_row(t, "unit_floor_consumption_kwh_m2", results,
            [](const ScenarioResult& r) { return r.unit_floor_consumption_kwh_m2; });

    add_row(t, "generation_gwh", results,
            [](const ScenarioResult& r) { return r.generation_annual_kwh / 1e6; });
    add_row(t, "specific_yield_kwh_kw", results,
            [](const ScenarioResult& r) { return r.specific_yield_kwh_per_kw; });
    add_row(t, "energy_sufficiency_pct", results,
            [](const ScenarioResult& r) { return r.indicators.energy_sufficiency_pct; });
    add_row(t, "self_sufficiency_pct", results,
            [](const ScenarioResult& r) { return r.indicators.self_sufficiency_pct; });
    add_row(t, "self_consumption_pct", results,
            [](const ScenarioResult& r) { return r.indicators.self_consumption_pct; });
    add_row(t, "co2_reduction_pct", results,
            [](const ScenarioResult& r) { return r.indicators.co2_reduction_pct; });

    for (const auto& [preset, unused] : results.front().finance) {
        (void)unused;
        add_row(t, "npv_musd_" + preset, results, [&preset](const ScenarioResult& r) {
            return r.finance.at(preset).npv / 1e6;
        });
        add_row(t, "payback_years_" + preset, results, [&preset](const ScenarioResult& r) {
            const auto& pb = r.finance.at(preset).payback_years;
            return pb ? static_cast<double>(*pb) : std::nan("");
        });
        add_row(t, "lcoe_usd_kwh_" + preset, results, [&preset](const ScenarioResult& r) {
            return r.finance.at(preset).lcoe_per_kwh;
        });
        add_row(t, "cost_saving_pct_" + preset, results, [&preset](const ScenarioResult& r) {
            return r.finance.at(preset).cost_saving_pct;
        });
    }
    return t;
}

std::string comparison_to_csv(const ComparisonTable& table) {
    std::string out = "# districtpv comparison schema 1\n";
    out += "indicator";
    for (const auto& name : table.scenario_names) out += "," + name;
    out += ",mean,stddev\n";
    char buf[64];
    for (const auto& row : table.rows) {
        out += row.label;
        auto emit = [&](double v) {
            if (std::isfinite(v)) {
                std::snprintf(buf, sizeof buf, ",%.6g", v);
                out += buf;
            } else {
                out += ",";
            }
        };
        for (double v : row.values) emit(v);
        emit(row.mean);
        emit(row.stddev);
        out += "\n";
    }
    return out;
}

std::string comparison_to_text(const ComparisonTable& table) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-32s", "indicator");
    out += buf;
    for (const auto& name : table.scenario_names) {
        std::snprintf(buf, sizeof buf, "%12s", name.c_str());
        out += buf;
    }
    out += "        mean      stddev\n";
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof buf, "%-32s", row.label.c_str());
        out += buf;
        for (double v : row.values) {
            if (std::isfinite(v))
                std::snprintf(buf, sizeof buf, "%12.4g", v);
            else
                std::snprintf(buf, sizeof buf, "%12s", "-");
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "%12.4g%12.4g", row.mean, row.stddev);
        out += buf;
        out += "\n";
    }
    return out;
}

std::string results_to_json(const std::vector<ScenarioResult>& results) {
    json root;
    root["schema_version"] = 1;
    root["scenarios"] = json::array();
    for (const auto& r : results) {
        json js;
        js["name"] = r.name;

        json geom;
        geom["total_floor_area_m2"] = finite_or_null(r.metrics.total_floor_area_m2);
        geom["far_pct"] = finite_or_null(r.metrics.far_pct);
        geom["bcr_pct"] = finite_or_null(r.metrics.bcr_pct);
        geom["total_volume_m3"] = finite_or_null(r.metrics.total_volume_m3);
        geom["above_ground_surface_m2"] = finite_or_null(r.metrics.above_ground_surface_m2);
        geom["surface_to_volume"] = finite_or_null(r.metrics.surface_to_volume);
        geom["rooftop_area_m2"] = finite_or_null(r.metrics.rooftop_area_m2);
        geom["max_pv_capacity_kw"] = finite_or_null(r.metrics.max_pv_capacity_kw);
        geom["building_count"] = r.metrics.building_count;
        geom["average_height_m"] = finite_or_null(r.metrics.average_height_m);
        js["geometry"] = geom;

        json dem;
        dem["lighting_kwh"] = finite_or_null(r.demand.lighting_kwh);
        dem["equipment_kwh"] = finite_or_null(r.demand.equipment_kwh);
        dem["heating_kwh"] = finite_or_null(r.demand.heating_kwh);
        dem["cooling_kwh"] = finite_or_null(r.demand.cooling_kwh);
        dem["total_kwh"] = finite_or_null(r.demand.total_kwh);
        dem["lighting_share_pct"] = finite_or_null(r.demand.lighting_share_pct);
        dem["equipment_share_pct"] = finite_or_null(r.demand.equipment_share_pct);
        dem["heating_share_pct"] = finite_or_null(r.demand.heating_share_pct);
        dem["cooling_share_pct"] = finite_or_null(r.demand.cooling_share_pct);
        dem["unit_floor_consumption_kwh_m2"] = finite_or_null(r.unit_floor_consumption_kwh_m2);
        js["demand"] = dem;

        json gen;
        gen["annual_kwh"] = finite_or_null(r.generation_annual_kwh);
        gen["specific_yield_kwh_per_kw"] = finite_or_null(r.specific_yield_kwh_per_kw);
        gen["capacity_kw"] = finite_or_null(r.array.capacity_kw);
        gen["tilt_deg"] = finite_or_null(r.array.tilt_deg);
        gen["azimuth_deg"] = finite_or_null(r.array.azimuth_deg);
        gen["system_loss_fraction"] = finite_or_null(r.array.system_loss_fraction);
        gen["degradation_per_year"] = finite_or_null(r.array.degradation_per_year);
        js["generation"] = gen;

        json ind;
        ind["energy_sufficiency_pct"] = finite_or_null(r.indicators.energy_sufficiency_pct);
        ind["self_sufficiency_pct"] = finite_or_null(r.indicators.self_sufficiency_pct);
        ind["self_consumption_pct"] = finite_or_null(r.indicators.self_consumption_pct);
        if (r.indicators.self_consumption_vacuous)
            ind["self_consumption_note"] = "no generation; 100% by convention";
        ind["co2_reduction_pct"] = finite_or_null(r.indicators.co2_reduction_pct);
        ind["co2_base_kg"] = finite_or_null(r.indicators.co2_base_kg);
        ind["co2_with_system_kg"] = finite_or_null(r.indicators.co2_with_system_kg);
        ind["annual_self_consumed_kwh"] = finite_or_null(r.balance.annual_self_consumed_kwh);
        ind["annual_exported_kwh"] = finite_or_null(r.balance.annual_exported_kwh);
        ind["annual_imported_kwh"] = finite_or_null(r.balance.annual_imported_kwh);
        js["indicators"] = ind;

        json fin;
        for (const auto& [preset, f] : r.finance) {
            json jf;
            jf["npv_usd"] = finite_or_null(f.npv);
            if (f.payback_years) {
                jf["payback_years"] = *f.payback_years;
            } else {
                jf["payback_years"] = nullptr;
                jf["payback_note"] = "not recovered within the project period";
            }
            jf["lcoe_usd_per_kwh"] = finite_or_null(f.lcoe_per_kwh);
            jf["cost_saving_pct"] = finite_or_null(f.cost_saving_pct);
            jf["annual_base_cost_usd"] = finite_or_null(f.annual_base_cost);
            if (!f.currency_note.empty()) jf["currency_note"] = f.currency_note;
            fin[preset] = jf;
        }
        js["finance"] = fin;
        root["scenarios"].push_back(js);
    }
    return root.dump(2) + "\n";
}

std::string balance_to_csv(const BalanceSeries& balance) {
    std::string out = "# districtpv balance schema 1\n";
    out += "hour_index,generation_kwh,demand_kwh,self_consumed_kwh,exported_kwh,imported_kwh\n";
    char line[160];
    for (std::size_t h = 0; h < balance.generation_kwh.size(); ++h) {
        std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.6f,%.6f,%.6f\n", h,
                      balance.generation_kwh[h], balance.demand_kwh[h],
                      balance.self_consumed_kwh[h], balance.exported_kwh[h],
                      balance.imported_kwh[h]);
        out += line;
    }
    return out;
}

std::vector<std::string> emit_outputs(const std::vector<ScenarioResult>& results,
                                      const RunConfig& cfg) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + cfg.output_dir);

    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& text) {
        const std::string path = (fs::path(cfg.output_dir) / name).string();
        write_file(path, text);
        written.push_back(path);
    };

    if (cfg.write_json) emit("scenario_results.json", results_to_json(results));

    if (cfg.write_csv) {
        if (results.size() >= 2) emit("comparison.csv", comparison_to_csv(compare(results)));
        for (const auto& r : results) emit("balance_" + r.name + ".csv", balance_to_csv(r.balance));
    }

    if (cfg.plots) {
        const std::vector<std::string> months = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                 "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
        for (const auto& r : results) {
            std::vector<double> dem = monthly_sums(r.balance.demand_kwh);
            std::vector<double> gen = monthly_sums(r.balance.generation_kwh);
            for (auto& v : dem) v /= 1e6;
            for (auto& v : gen) v /= 1e6;
            emit("monthly_" + r.name + ".svg",
                 svg_grouped_bars("Monthly demand and PV generation: " + r.name, months,
                                  {{"demand", "#4878a8", dem}, {"generation", "#e8a33d", gen}},
                                  "GWh"));

            std::vector<LineSeries> lines;
            const std::vector<std::string> colors = {"#4878a8", "#a84848", "#48a868"};
            std::size_t ci = 0;
            for (const auto& [preset, cf] : r.cash_flows) {
                LineSeries ls;
                ls.label = preset;
                ls.color = colors[ci++ % colors.size()];
                ls.x.push_back(0.0);
                ls.y.push_back(-cf.system_cost / 1e6);
                for (std::size_t yix = 0; yix < cf.cumulative.size(); ++yix) {
                    ls.x.push_back(static_cast<double>(yix + 1));
                    ls.y.push_back((cf.cumulative[yix] - cf.system_cost) / 1e6);
                }
                lines.push_back(std::move(ls));
            }
            emit("cashflow_" + r.name + ".svg",
                 svg_lines("Cumulative net cash position: " + r.name, lines, "project year",
                           "million $"));
        }
    }
    return written;
}

} // namespace districtpv
