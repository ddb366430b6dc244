#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "districtpv/config_io.hpp"
#include "districtpv/errors.hpp"
#include "districtpv/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    districtpv::RunConfig cfg;
    std::vector<std::string> years;
    std::string formats = "csv,json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_scenarios) {
    cmd->add_option("--weather", opts.cfg.weather_path, "EPW weather file")->required();
    auto* scen = cmd->add_option("--scenario", opts.cfg.scenario_paths,
                                 "scenario configuration file (repeatable)");
    if (need_scenarios) scen->required();
    cmd->add_option("--year", opts.years, "finance preset year: 2018 or 2030 (repeatable)");
    cmd->add_option("--finance-params", opts.cfg.finance_params_path,
                    "finance parameter file (replaces --year presets)");
    cmd->add_option("--demand-params", opts.cfg.demand_params_path, "demand parameter file");
    cmd->add_option("--calibrate-to", opts.cfg.targets_path,
                    "annual demand targets; calibrated against the first scenario");
    cmd->add_option("--tilt", opts.cfg.array.tilt_deg, "array tilt from horizontal, degrees");
    cmd->add_option("--azimuth", opts.cfg.array.azimuth_deg,
                    "array azimuth clockwise from north, degrees");
    cmd->add_option("--loss", opts.cfg.array.system_loss_fraction, "flat system loss fraction");
    cmd->add_option("--degradation", opts.cfg.array.degradation_per_year,
                    "annual output degradation fraction");
    cmd->add_option("--out", opts.cfg.output_dir, "output directory");
    cmd->add_option("--format", opts.formats, "output formats, comma list of csv,json");
    cmd->add_flag("--plots", opts.cfg.plots, "emit SVG charts");
}

void finalize(CommonOpts& opts) {
    if (!opts.years.empty()) opts.cfg.finance_presets = opts.years;
    opts.cfg.write_csv = opts.formats.find("csv") != std::string::npos;
    opts.cfg.write_json = opts.formats.find("json") != std::string::npos;
}

void print_scenario_summary(const districtpv::ScenarioResult& r) {
    std::printf("%s\n", r.name.c_str());
    std::printf("  FAR %.0f%%  BCR %.1f%%  rooftop %.0f m2  max PV %.1f kW\n", r.metrics.far_pct,
                r.metrics.bcr_pct, r.metrics.rooftop_area_m2, r.metrics.max_pv_capacity_kw);
    std::printf("  demand %.2f GWh (unit %.0f kWh/m2)  generation %.2f GWh (yield %.0f kWh/kW)\n",
                r.demand.total_kwh / 1e6, r.unit_floor_consumption_kwh_m2,
                r.generation_annual_kwh / 1e6, r.specific_yield_kwh_per_kw);
    std::printf("  ES %.1f%%  SS %.1f%%  SC %.1f%%  CO2 reduction %.1f%%\n",
                r.indicators.energy_sufficiency_pct, r.indicators.self_sufficiency_pct,
                r.indicators.self_consumption_pct, r.indicators.co2_reduction_pct);
    for (const auto& [preset, f] : r.finance) {
        const std::string payback =
            f.payback_years ? std::to_string(*f.payback_years) + " yrs" : "never";
        std::printf("  [%s] NPV %.2f M$  LCOE %.3f $/kWh  payback %s  cost saving %.1f%%\n",
                    preset.c_str(), f.npv / 1e6, f.lcoe_per_kwh, payback.c_str(),
                    f.cost_saving_pct);
    }
}

int run_analyze(CommonOpts& opts, bool require_two) {
    finalize(opts);
    if (require_two && opts.cfg.scenario_paths.size() < 2)
        throw districtpv::UsageError("compare requires at least two scenarios");

    const auto results = districtpv::run_all(opts.cfg);
    for (const auto& r : results) print_scenario_summary(r);

    if (results.size() >= 2)
        std::printf("\n%s", comparison_to_text(districtpv::compare(results)).c_str());

    const auto written = districtpv::emit_outputs(results, opts.cfg);
    for (const auto& path : written) std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

int run_sweep(CommonOpts& opts, double step_kw) {
    finalize(opts);
    const districtpv::RunContext ctx = districtpv::build_context(opts.cfg);

    for (const auto& path : opts.cfg.scenario_paths) {
        const auto scenario = districtpv::load_scenario(path);
        const auto metrics = districtpv::derive_metrics(scenario);
        const auto demand = districtpv::synthesize_demand(metrics, ctx.weather, ctx.demand_params);
        const auto demand_total = demand.total_series();

        // Generation is homogeneous in capacity, so one reference series
        // scales across the whole grid.
        districtpv::PvArraySpec ref = ctx.array_template;
        ref.capacity_kw = metrics.max_pv_capacity_kw;
        const auto gen_ref = districtpv::generation_series(ctx.weather, ref);

        auto factory = [&](double capacity) {
            std::vector<double> gen(gen_ref.hourly_kwh.size());
            const double scale = capacity / ref.capacity_kw;
            for (std::size_t h = 0; h < gen.size(); ++h)
                gen[h] = gen_ref.hourly_kwh[h] * scale;
            return districtpv::hourly_balance(demand_total, gen);
        };

        const double cap_max = metrics.max_pv_capacity_kw;
        const double step = step_kw > 0.0 ? step_kw : cap_max / 50.0;

        std::printf("%s: sweep to %.1f kW in %.1f kW steps\n", scenario.name.c_str(), cap_max,
                    step);
        for (const auto& [preset, params] : ctx.finance) {
            const auto sweep = districtpv::capacity_sweep(
                factory, params, ctx.array_template.degradation_per_year, cap_max, step);
            std::printf("  [%s] best capacity %.1f kW, NPV %.2f M$%s\n", preset.c_str(),
                        sweep.best_capacity_kw, sweep.best_npv / 1e6,
                        sweep.profitable ? "" : "  (no profitable point)");

            std::string csv = "# districtpv sweep schema 1\ncapacity_kw,npv_usd\n";
            char buf[64];
            for (const auto& pt : sweep.points) {
                std::snprintf(buf, sizeof buf, "%.3f,%.2f\n", pt.capacity_kw, pt.npv);
                csv += buf;
            }
            std::error_code ec;
            std::filesystem::create_directories(opts.cfg.output_dir, ec);
            const auto out_path = std::filesystem::path(opts.cfg.output_dir) /
                                  ("sweep_" + scenario.name + "_" + preset + ".csv");
            std::ofstream out(out_path);
            if (!out) throw districtpv::IoError("cannot write " + out_path.string());
            out << csv;
            std::printf("  wrote %s\n", out_path.string().c_str());
        }
    }
    return kExitOk;
}

int run_calibrate(CommonOpts& opts, const std::string& params_out) {
    finalize(opts);
    if (opts.cfg.targets_path.empty())
        throw districtpv::UsageError("calibrate requires --calibrate-to <targets file>");
    const auto ctx = districtpv::build_context(opts.cfg);
    districtpv::save_demand_params(ctx.demand_params, params_out);
    std::printf("wrote %s\n", params_out.c_str());
    std::printf("  lighting %.3f kWh/m2/yr, equipment %.3f kWh/m2/yr\n",
                ctx.demand_params.lighting_intensity_kwh_m2,
                ctx.demand_params.equipment_intensity_kwh_m2);
    std::printf("  heating envelope %.4f W/m2K, cooling gain %.4f W/m2K\n",
                ctx.demand_params.heating_envelope_w_m2k, ctx.demand_params.cooling_gain_w_m2k);
    return kExitOk;
}

int run_validate_weather(const std::string& weather_path) {
    const auto parsed = districtpv::parse_epw_file(weather_path);
    std::printf("%s: %zu records, site %.2f N %.2f E, tz %+.1f h\n", weather_path.c_str(),
                parsed.weather.records.size(), parsed.weather.latitude_deg,
                parsed.weather.longitude_deg, parsed.weather.timezone_hours);
    if (!parsed.fixes.empty())
        std::printf("interpolated %zu missing-value sentinel(s)\n", parsed.fixes.size());

    const auto report = districtpv::validate_weather(parsed.weather);
    if (report.ok()) {
        std::printf("no findings\n");
    } else {
        std::printf("%zu finding(s):\n", report.findings.size());
        for (const auto& f : report.findings)
            std::printf("  record %d: %s\n", f.record_index, f.detail.c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"districtpv: rooftop-PV district analysis"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, compare_opts, sweep_opts, calib_opts;
    double sweep_step = 0.0;
    std::string params_out = "demand_params.json";
    std::string weather_only;

    auto* analyze = app.add_subcommand("analyze", "evaluate one or more scenarios end to end");
    add_common(analyze, analyze_opts, true);

    auto* cmp = app.add_subcommand("compare", "side-by-side comparison of two or more scenarios");
    add_common(cmp, compare_opts, true);

    auto* sweep = app.add_subcommand("sweep", "NPV capacity sweep up to the rooftop maximum");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--sweep", sweep_step, "sweep step in kW (default: max/50)");

    auto* calib = app.add_subcommand("calibrate", "solve demand parameters from annual targets");
    add_common(calib, calib_opts, true);
    calib->add_option("--params-out", params_out, "path for the calibrated parameter file");

    auto* valw = app.add_subcommand("validate-weather", "parse and sanity-check a weather file");
    valw->add_option("--weather", weather_only, "EPW weather file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_opts, false);
        if (cmp->parsed()) return run_analyze(compare_opts, true);
        if (sweep->parsed()) return run_sweep(sweep_opts, sweep_step);
        if (calib->parsed()) return run_calibrate(calib_opts, params_out);
        if (valw->parsed()) return run_validate_weather(weather_only);
    } catch (const districtpv::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const districtpv::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const districtpv::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitUsage;
}
