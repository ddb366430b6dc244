#pragma once

#include <optional>
#include <string>
#include <vector>

namespace districtpv {

// A flat-roofed prism. When no perimeter is given the wall area falls back
// to a square footprint (4*sqrt(area)*height); real scenarios should carry
// surveyed perimeters since slabs and courtyard blocks have much longer
// walls than the square bound.
struct BuildingSpec {
    std::string id;
    double footprint_area_m2 = 0.0;
    double height_m = 0.0;
    double floor_height_m = 3.0;
    std::optional<double> perimeter_m;

    int floor_count() const; // height/floor_height rounded to nearest, >= 1
    double wall_area_m2() const;
};

struct ScenarioSpec {
    std::string name;
    double site_area_m2 = 0.0;
    std::vector<BuildingSpec> buildings;
    double pv_area_coefficient_m2_per_kw = 7.0;
};

struct DistrictMetrics {
    double total_floor_area_m2 = 0.0;
    double far_pct = 0.0; // total floor area / site area * 100
    double bcr_pct = 0.0; // footprint / site area * 100
    double total_volume_m3 = 0.0;
    double above_ground_surface_m2 = 0.0;
    double surface_to_volume = 0.0;
    double rooftop_area_m2 = 0.0;
    double max_pv_capacity_kw = 0.0;
    int building_count = 0;
    double average_height_m = 0.0;
};

struct ScenarioFinding {
    std::string building_id; // empty for scenario-level findings
    std::string detail;
};

// Report-only checks: footprint overflow, nonpositive dimensions, heights
// that are not near a whole number of floors (within a quarter floor).
std::vector<ScenarioFinding> validate_scenario(const ScenarioSpec& s);

// Derives the district metrics; throws ValidationError listing the
// offending buildings when the scenario is not well formed.
DistrictMetrics derive_metrics(const ScenarioSpec& s);

// Rough annual output of facade-mounted PV: area/coefficient gives the
// capacity, yield the rooftop-equivalent production, and the derate the
// poorer insolation of vertical surfaces.
double facade_pv_estimate(double facade_area_m2, double coefficient_m2_per_kw,
                          double yield_kwh_per_kw, double facade_derate = 0.55);

} // namespace districtpv
