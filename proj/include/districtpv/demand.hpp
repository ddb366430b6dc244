#pragma once

#include <array>
#include <vector>

#include "districtpv/geometry.hpp"
#include "districtpv/weather.hpp"

namespace districtpv {

// Parametric office-district load model. Lighting and equipment follow the
// occupancy schedule and scale with floor area; space heating scales with
// envelope surface and heating degree-hours; space cooling combines a small
// envelope term with an occupancy-gated internal-gain term so it tracks
// floor area rather than surface. Thermal loads convert to electricity
// through the heat-pump COPs.
struct DemandParams {
    // Defaults are the calibration result for the bundled Tokyo site-year
    // against the existing-district reference scenario.
    double lighting_intensity_kwh_m2 = 41.6216;   // per m2 floor per year
    double equipment_intensity_kwh_m2 = 228.1081; // per m2 floor per year
    double heating_envelope_w_m2k = 0.753184;     // per m2 surface per degC
    double cooling_gain_w_m2k = 32.118077;        // per m2 floor per degC, occupancy-gated
    double heating_cop = 2.27;
    double cooling_cop = 2.51;
    double heating_base_c = 18.0;
    double cooling_base_c = 24.0;
    std::array<double, 168> weekly_schedule = default_weekly_schedule();

    // Weekday business hours at full occupancy, nights at standby, weekends
    // at the always-on base load of office equipment.
    static std::array<double, 168> default_weekly_schedule();

    void validate() const; // throws ValidationError
};

struct DemandSeries {
    std::vector<double> lighting_kwh;  // 8760 each
    std::vector<double> equipment_kwh;
    std::vector<double> heating_kwh;
    std::vector<double> cooling_kwh;

    double lighting_total_kwh = 0.0;
    double equipment_total_kwh = 0.0;
    double heating_total_kwh = 0.0;
    double cooling_total_kwh = 0.0;
    double total_kwh = 0.0;
    double unit_floor_consumption_kwh_m2 = 0.0;

    double total_at(std::size_t h) const {
        return lighting_kwh[h] + equipment_kwh[h] + cooling_kwh[h] + heating_kwh[h];
    }
    std::vector<double> total_series() const;
};

struct DemandBreakdown {
    double lighting_kwh = 0.0, equipment_kwh = 0.0, heating_kwh = 0.0, cooling_kwh = 0.0;
    double lighting_share_pct = 0.0, equipment_share_pct = 0.0, heating_share_pct = 0.0,
           cooling_share_pct = 0.0;
    double total_kwh = 0.0;
};

// Annual calibration targets, one per component.
struct DemandTargets {
    double lighting_kwh = 0.0;
    double equipment_kwh = 0.0;
    double heating_kwh = 0.0;
    double cooling_kwh = 0.0;
};

DemandSeries synthesize_demand(const DistrictMetrics& m, const WeatherYear& w,
                               const DemandParams& p);

// Solves params so synthesize_demand reproduces the annual targets exactly:
// intensities in closed form, the two thermal coefficients by linear
// inversion (each component is linear in its coefficient). Throws
// CalibrationError when the weather has no degree-hours to carry a nonzero
// thermal target.
DemandParams calibrate(const DistrictMetrics& m, const WeatherYear& w,
                       const DemandTargets& targets, const DemandParams& base = {});

DemandBreakdown annual_breakdown(const DemandSeries& d);

} // namespace districtpv
