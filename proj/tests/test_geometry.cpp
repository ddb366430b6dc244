#include <doctest.h>

#include <fstream>

#include "districtpv/config_io.hpp"
#include "districtpv/errors.hpp"
#include "districtpv/geometry.hpp"
#include "support.hpp"

using namespace districtpv;
using namespace testsupport;

namespace {

ScenarioSpec single_building(double site, double footprint, double height) {
    ScenarioSpec s;
    s.name = "single";
    s.site_area_m2 = site;
    s.buildings.push_back({"b1", footprint, height, 3.0, std::nullopt});
    return s;
}

} // namespace

TEST_CASE("FAR from total floor area over site area") {
    // 18,500 m2 footprint, 10 floors: 185,000 m2 on a 46,250 m2 site.
    const auto m = derive_metrics(single_building(46250.0, 18500.0, 30.0));
    CHECK(m.total_floor_area_m2 == doctest::Approx(185000.0));
    CHECK(m.far_pct == doctest::Approx(400.0));
    CHECK(m.total_volume_m3 == doctest::Approx(555000.0));
}

TEST_CASE("rooftop area over seven square metres per kilowatt") {
    const auto m = derive_metrics(single_building(46250.0, 8400.0, 66.0));
    CHECK(m.rooftop_area_m2 == doctest::Approx(8400.0));
    CHECK(m.max_pv_capacity_kw == doctest::Approx(1200.0));
}

TEST_CASE("full coverage gives 100 percent BCR") {
    const auto m = derive_metrics(single_building(5000.0, 5000.0, 12.0));
    CHECK(m.bcr_pct == doctest::Approx(100.0));
}

TEST_CASE("floor count rounds to the nearest whole floor") {
    BuildingSpec b{"b", 100.0, 27.0, 3.0, std::nullopt};
    CHECK(b.floor_count() == 9);
    b.height_m = 2.0; // below one floor height
    CHECK(b.floor_count() == 1);
    b.height_m = 31.4;
    CHECK(b.floor_count() == 10);
}

TEST_CASE("scenario validation findings") {
    ScenarioSpec s = single_building(1000.0, 1200.0, 27.0); // overflow
    auto findings = validate_scenario(s);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].detail.find("exceed") != std::string::npos);

    s = single_building(1000.0, 100.0, 0.0); // flat
    findings = validate_scenario(s);
    CHECK(!findings.empty());

    s = single_building(1000.0, 100.0, 26.0); // 8.67 floors: off-grid height
    findings = validate_scenario(s);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].building_id == "b1");

    s = single_building(1000.0, 100.0, 27.0);
    CHECK(validate_scenario(s).empty());

    s = single_building(1000.0, 100.0, 27.0);
    s.buildings[0].perimeter_m = 30.0; // below 4*sqrt(100) = 40
    CHECK(validate_scenario(s).size() == 1);
}

TEST_CASE("derive_metrics rejects broken scenarios with the offender list") {
    ScenarioSpec s = single_building(1000.0, 100.0, 27.0);
    s.buildings.push_back({"b2", -5.0, 10.0, 3.0, std::nullopt});
    try {
        derive_metrics(s);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("b2") != std::string::npos);
    }
}

TEST_CASE("FAR is invariant under rearranging a fixed floor area") {
    ScenarioSpec one = single_building(46250.0, 18500.0, 30.0);
    ScenarioSpec many;
    many.name = "many";
    many.site_area_m2 = 46250.0;
    // Same 185,000 m2 split across four buildings of different shapes.
    many.buildings.push_back({"a", 10000.0, 30.0, 3.0, std::nullopt}); // 100,000
    many.buildings.push_back({"b", 5000.0, 30.0, 3.0, std::nullopt});  // 50,000
    many.buildings.push_back({"c", 2500.0, 30.0, 3.0, std::nullopt});  // 25,000
    many.buildings.push_back({"d", 1000.0, 30.0, 3.0, std::nullopt});  // 10,000
    CHECK(derive_metrics(one).far_pct == doctest::Approx(derive_metrics(many).far_pct));
}

TEST_CASE("height scaling scales volume and leaves BCR unchanged") {
    ScenarioSpec s = single_building(46250.0, 9000.0, 27.0);
    s.buildings.push_back({"b2", 4000.0, 18.0, 3.0, std::nullopt});
    const auto before = derive_metrics(s);
    for (auto& b : s.buildings) b.height_m *= 2.0;
    const auto after = derive_metrics(s);
    CHECK(after.total_volume_m3 == doctest::Approx(2.0 * before.total_volume_m3));
    CHECK(after.bcr_pct == doctest::Approx(before.bcr_pct));
}

TEST_CASE("bundled scenarios reproduce the district characteristics") {
    struct Expect {
        const char* file;
        int n;
        double rooftop;
        double capacity_kw;
        double surface;
    };
    const Expect table[] = {
        {"s0_existing.json", 14, 20200.0, 2885.7, 86005.0},
        {"s1_low_rise.json", 6, 30800.0, 4400.0, 63800.0},
        {"s2_high_rise.json", 6, 8400.0, 1200.0, 77088.0},
        {"s3_center_corridor.json", 13, 16800.0, 2400.0, 103737.0},
        {"s4_courtyard.json", 6, 16800.0, 2400.0, 111018.0},
        {"s5_korean_style.json", 10, 10300.0, 1471.4, 83317.0},
    };
    for (const auto& e : table) {
        const auto m = derive_metrics(load_scenario(scenario_path(e.file)));
        CAPTURE(e.file);
        CHECK(m.building_count == e.n);
        CHECK(m.total_floor_area_m2 == doctest::Approx(185000.0));
        CHECK(m.far_pct == doctest::Approx(400.0));
        CHECK(m.total_volume_m3 == doctest::Approx(555000.0));
        CHECK(m.rooftop_area_m2 == doctest::Approx(e.rooftop));
        CHECK(m.max_pv_capacity_kw == doctest::Approx(e.capacity_kw).epsilon(1e-4));
        CHECK(m.above_ground_surface_m2 == doctest::Approx(e.surface));
        CHECK(validate_scenario(load_scenario(scenario_path(e.file))).empty());
    }
}

TEST_CASE("scenario serialization round-trips") {
    const auto original = load_scenario(scenario_path("s4_courtyard.json"));
    const std::string path = "/tmp/districtpv_scenario_rt.json";
    {
        std::ofstream out(path);
        out << scenario_to_json(original);
    }
    const auto reloaded = load_scenario(path);
    CHECK(reloaded.name == original.name);
    CHECK(reloaded.buildings.size() == original.buildings.size());
    const auto a = derive_metrics(original);
    const auto b = derive_metrics(reloaded);
    CHECK(a.total_floor_area_m2 == b.total_floor_area_m2);
    CHECK(a.above_ground_surface_m2 == b.above_ground_surface_m2);
    CHECK(a.max_pv_capacity_kw == b.max_pv_capacity_kw);
}

TEST_CASE("facade estimate") {
    // South-facing facade area of the existing district at a yield that a
    // thin-film facade install would reach before the vertical derate.
    CHECK(facade_pv_estimate(12425.0, 7.0, 2150.0) == doctest::Approx(2.099e6).epsilon(0.25));
    CHECK(facade_pv_estimate(12425.0, 7.0, 1183.0, 1.0) == doctest::Approx(2.1e6).epsilon(0.25));
    CHECK(facade_pv_estimate(0.0, 7.0, 1258.0) == 0.0);
    CHECK(facade_pv_estimate(2000.0, 7.0, 1258.0) ==
          doctest::Approx(2.0 * facade_pv_estimate(1000.0, 7.0, 1258.0)));
    CHECK_THROWS_AS(facade_pv_estimate(100.0, 0.0, 1258.0), DomainError);
}
