#include "districtpv/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "districtpv/errors.hpp"

namespace districtpv {

int BuildingSpec::floor_count() const {
    const int n = static_cast<int>(std::lround(height_m / floor_height_m));
    return std::max(n, 1);
}

double BuildingSpec::wall_area_m2() const {
    const double perimeter =
        perimeter_m ? *perimeter_m : 4.0 * std::sqrt(footprint_area_m2);
    return perimeter * height_m;
}

std::vector<ScenarioFinding> validate_scenario(const ScenarioSpec& s) {
    std::vector<ScenarioFinding> findings;
    if (s.site_area_m2 <= 0.0)
        findings.push_back({"", "site area must be positive"});
    if (s.pv_area_coefficient_m2_per_kw <= 0.0)
        findings.push_back({"", "pv area coefficient must be positive"});
    if (s.buildings.empty())
        findings.push_back({"", "scenario has no buildings"});

    double footprint_sum = 0.0;
    for (const auto& b : s.buildings) {
        if (b.footprint_area_m2 <= 0.0)
            findings.push_back({b.id, "footprint area must be positive"});
        if (b.height_m <= 0.0)
            findings.push_back({b.id, "height must be positive"});
        if (b.floor_height_m <= 0.0)
            findings.push_back({b.id, "floor height must be positive"});
        if (b.perimeter_m && *b.perimeter_m < 4.0 * std::sqrt(std::max(b.footprint_area_m2, 0.0)))
            findings.push_back({b.id, "perimeter shorter than the square-footprint minimum"});
        if (b.height_m > 0.0 && b.floor_height_m > 0.0) {
            const double floors = b.height_m / b.floor_height_m;
            if (std::abs(floors - std::lround(floors)) > 0.25)
                findings.push_back({b.id, "height is not near a whole number of floors"});
        }
        footprint_sum += b.footprint_area_m2;
    }
    if (s.site_area_m2 > 0.0 && footprint_sum > s.site_area_m2)
        findings.push_back({"", "building footprints exceed the site area"});
    return findings;
}

DistrictMetrics derive_metrics(const ScenarioSpec& s) {
    std::string offenders;
    if (s.site_area_m2 <= 0.0) offenders += " [site area]";
    double footprint_sum = 0.0;
    for (const auto& b : s.buildings) {
        if (b.footprint_area_m2 <= 0.0 || b.height_m <= 0.0 || b.floor_height_m <= 0.0)
            offenders += " [" + b.id + "]";
        footprint_sum += b.footprint_area_m2;
    }
    if (s.buildings.empty()) offenders += " [no buildings]";
    if (footprint_sum > s.site_area_m2 && s.site_area_m2 > 0.0)
        offenders += " [footprints exceed site]";
    if (!offenders.empty())
        throw ValidationError("scenario '" + s.name + "' invalid:" + offenders);

    DistrictMetrics m;
    m.building_count = static_cast<int>(s.buildings.size());
    for (const auto& b : s.buildings) {
        m.total_floor_area_m2 += b.footprint_area_m2 * b.floor_count();
        m.total_volume_m3 += b.footprint_area_m2 * b.height_m;
        m.above_ground_surface_m2 += b.wall_area_m2() + b.footprint_area_m2;
        m.rooftop_area_m2 += b.footprint_area_m2;
        m.average_height_m += b.height_m;
    }
    m.average_height_m /= m.building_count;
    m.far_pct = m.total_floor_area_m2 / s.site_area_m2 * 100.0;
    m.bcr_pct = footprint_sum / s.site_area_m2 * 100.0;
    m.surface_to_volume = m.above_ground_surface_m2 / m.total_volume_m3;
    m.max_pv_capacity_kw = m.rooftop_area_m2 / s.pv_area_coefficient_m2_per_kw;
    return m;
}

double facade_pv_estimate(double facade_area_m2, double coefficient_m2_per_kw,
                          double yield_kwh_per_kw, double facade_derate) {
    if (facade_area_m2 == 0.0) return 0.0;
    if (facade_area_m2 < 0.0 || coefficient_m2_per_kw <= 0.0 || yield_kwh_per_kw <= 0.0 ||
        facade_derate <= 0.0)
        throw DomainError("facade estimate inputs must be positive");
    return facade_area_m2 / coefficient_m2_per_kw * yield_kwh_per_kw * facade_derate;
}

} // namespace districtpv
