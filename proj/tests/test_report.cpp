#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "districtpv/config_io.hpp"
#include "districtpv/errors.hpp"
#include "districtpv/report.hpp"
#include "districtpv/svg_chart.hpp"
#include "support.hpp"

using namespace districtpv;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

RunConfig demo_config(const std::string& out_dir, std::size_t n_scenarios = 2) {
    const char* files[] = {"s0_existing.json", "s1_low_rise.json",    "s2_high_rise.json",
                           "s3_center_corridor.json", "s4_courtyard.json", "s5_korean_style.json"};
    RunConfig cfg;
    cfg.weather_path = data_path("tokyo_shinagawa_2018.epw");
    for (std::size_t i = 0; i < n_scenarios; ++i)
        cfg.scenario_paths.push_back(scenario_path(files[i]));
    cfg.targets_path = data_path("demand_targets.json");
    cfg.output_dir = out_dir;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("pipeline result is self-consistent") {
    const auto cfg = demo_config("/tmp/districtpv_report_test");
    const auto ctx = build_context(cfg);
    const auto r = run_scenario(ctx, load_scenario(cfg.scenario_paths[0]));

    CHECK(r.metrics.far_pct == doctest::Approx(400.0));
    // Indicator identity against the same balance the finance block used.
    CHECK(r.indicators.self_sufficiency_pct ==
          doctest::Approx(r.indicators.energy_sufficiency_pct *
                          r.indicators.self_consumption_pct / 100.0)
              .epsilon(1e-12));
    CHECK(r.generation_annual_kwh == doctest::Approx(r.balance.annual_generation_kwh));
    CHECK(r.finance.count("2018") == 1);
    CHECK(r.finance.count("2030") == 1);
    CHECK(r.finance.at("2030").npv > r.finance.at("2018").npv);
}

TEST_CASE("empty building list fails validation") {
    const auto cfg = demo_config("/tmp/districtpv_report_test");
    const auto ctx = build_context(cfg);
    ScenarioSpec empty;
    empty.name = "empty";
    empty.site_area_m2 = 1000.0;
    CHECK_THROWS_AS(run_scenario(ctx, empty), ValidationError);
}

TEST_CASE("six-scenario run emits the full file set") {
    const std::string out = "/tmp/districtpv_emit_test";
    fs::remove_all(out);
    auto cfg = demo_config(out, 6);
    cfg.plots = true;

    const auto results = run_all(cfg);
    const auto written = emit_outputs(results, cfg);

    // 1 JSON + 1 comparison CSV + 6 balance CSVs + 12 SVGs.
    CHECK(written.size() == 20);
    CHECK(fs::exists(fs::path(out) / "scenario_results.json"));
    CHECK(fs::exists(fs::path(out) / "comparison.csv"));
    int balances = 0, svgs = 0;
    for (const auto& entry : fs::directory_iterator(out)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("balance_", 0) == 0) ++balances;
        if (entry.path().extension() == ".svg") ++svgs;
    }
    CHECK(balances == 6);
    CHECK(svgs == 12);

    SUBCASE("outputs are deterministic") {
        const std::string json_once = slurp((fs::path(out) / "scenario_results.json").string());
        emit_outputs(run_all(cfg), cfg);
        CHECK(slurp((fs::path(out) / "scenario_results.json").string()) == json_once);
    }

    SUBCASE("json parses and carries the schema fields") {
        const auto j = nlohmann::json::parse(slurp((fs::path(out) / "scenario_results.json").string()));
        CHECK(j.at("schema_version") == 1);
        REQUIRE(j.at("scenarios").size() == 6);
        const auto& s0 = j.at("scenarios")[0];
        CHECK(s0.at("geometry").at("far_pct").get<double>() == doctest::Approx(400.0));
        CHECK(s0.at("finance").contains("2018"));
        CHECK(s0.at("indicators").at("self_consumption_pct").get<double>() ==
              doctest::Approx(100.0));
        // Core numeric fields are real numbers, not nulls.
        for (const auto& s : j.at("scenarios")) {
            CHECK(s.at("geometry").at("far_pct").is_number());
            CHECK(s.at("demand").at("total_kwh").is_number());
            CHECK(s.at("generation").at("annual_kwh").is_number());
            for (const auto& [preset, jf] : s.at("finance").items()) {
                (void)preset;
                CHECK(jf.at("npv_usd").is_number());
                CHECK(jf.at("lcoe_usd_per_kwh").is_number());
            }
        }
    }

    SUBCASE("balance csv has the documented columns") {
        const auto text = slurp((fs::path(out) / "balance_s0_existing.csv").string());
        CHECK(text.rfind("# districtpv balance schema 1\n", 0) == 0);
        CHECK(text.find("hour_index,generation_kwh,demand_kwh,self_consumed_kwh,"
                        "exported_kwh,imported_kwh") != std::string::npos);
    }

    SUBCASE("plots disabled drops the svg files") {
        const std::string out2 = "/tmp/districtpv_emit_test2";
        fs::remove_all(out2);
        auto cfg2 = cfg;
        cfg2.output_dir = out2;
        cfg2.plots = false;
        emit_outputs(results, cfg2);
        for (const auto& entry : fs::directory_iterator(out2))
            CHECK(entry.path().extension() != ".svg");
    }
}

TEST_CASE("comparison mirrors the scenario-table presentation") {
    const std::string out = "/tmp/districtpv_compare_test";
    auto cfg = demo_config(out, 6);
    const auto results = run_all(cfg);
    const auto table = compare(results);

    REQUIRE(table.scenario_names.size() == 6);
    const ComparisonRow* rooftop = nullptr;
    const ComparisonRow* sc = nullptr;
    for (const auto& row : table.rows) {
        if (row.label == "rooftop_area_m2") rooftop = &row;
        if (row.label == "self_consumption_pct") sc = &row;
    }
    REQUIRE(rooftop != nullptr);
    REQUIRE(sc != nullptr);

    // Sample deviation over mean for the rooftop areas is about 46%.
    CHECK(rooftop->stddev / rooftop->mean * 100.0 == doctest::Approx(46.0).epsilon(0.02));
    for (double v : sc->values) CHECK(v == doctest::Approx(100.0));
    CHECK(sc->stddev == doctest::Approx(0.0));

    const auto csv = comparison_to_csv(table);
    CHECK(csv.rfind("# districtpv comparison schema 1\n", 0) == 0);
    CHECK(csv.find("far_pct") != std::string::npos);
}

TEST_CASE("identical scenarios compare with zero deviation") {
    auto cfg = demo_config("/tmp/districtpv_same_test", 1);
    cfg.scenario_paths.push_back(cfg.scenario_paths[0]);
    const auto results = run_all(cfg);
    const auto table = compare(results);
    for (const auto& row : table.rows) {
        if (std::isfinite(row.stddev)) CHECK(row.stddev == doctest::Approx(0.0));
    }
}

TEST_CASE("comparison needs two results") {
    auto cfg = demo_config("/tmp/districtpv_single_test", 1);
    const auto results = run_all(cfg);
    CHECK_THROWS_AS(compare(results), UsageError);
}

TEST_CASE("missing payback serializes as null with a reason") {
    ScenarioResult r;
    r.name = "never";
    FinanceResult f;
    f.npv = -100.0;
    f.payback_years = std::nullopt;
    f.lcoe_per_kwh = 0.5;
    f.annual_base_cost = 1000.0;
    r.finance["2018"] = f;
    const auto j = nlohmann::json::parse(results_to_json({r}));
    const auto& jf = j.at("scenarios")[0].at("finance").at("2018");
    CHECK(jf.at("payback_years").is_null());
    CHECK(jf.at("payback_note").get<std::string>().find("not recovered") != std::string::npos);
}

TEST_CASE("svg primitives render balanced markup") {
    const auto bars = svg_grouped_bars("demo", {"a", "b", "c"},
                                       {{"x", "#4878a8", {1.0, 2.0, 3.0}},
                                        {"y", "#e8a33d", {3.0, 1.0, 0.5}}},
                                       "GWh");
    CHECK(bars.rfind("<svg ", 0) == 0);
    CHECK(bars.find("</svg>") != std::string::npos);
    CHECK(std::count(bars.begin(), bars.end(), '<') ==
          std::count(bars.begin(), bars.end(), '>'));
    CHECK(bars.find("<rect") != std::string::npos);

    LineSeries ls{"cash", "#4878a8", {0.0, 1.0, 2.0}, {-5.0, 0.0, 4.0}};
    const auto lines = svg_lines("demo", {ls}, "year", "M$");
    CHECK(lines.find("<polyline") != std::string::npos);
    CHECK(lines.find("stroke-dasharray") != std::string::npos); // zero line drawn
}

TEST_CASE("missing weather file is an io error") {
    auto cfg = demo_config("/tmp/districtpv_io_test");
    cfg.weather_path = "/nonexistent/file.epw";
    CHECK_THROWS_AS(run_all(cfg), IoError);
}
