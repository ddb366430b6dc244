#pragma once

#include <vector>

#include "districtpv/sun_position.hpp"
#include "districtpv/weather.hpp"

namespace districtpv {

// Fixed tilted array. The loss fraction is a single flat system derate
// (soiling, wiring, inverter, temperature) calibrated against the bundled
// site-year; no separate cell-temperature model.
struct PvArraySpec {
    double capacity_kw = 0.0;
    double tilt_deg = 30.0;
    double azimuth_deg = 180.0; // due south
    double system_loss_fraction = default_loss_fraction;
    double degradation_per_year = 0.005;
    double ground_albedo = 0.2;

    // Flat derate calibrated so the bundled Tokyo site-year at 30 degree
    // tilt, due south, produces the specific yield observed for commercial
    // rooftop systems there (about 1258 kWh/kW/yr).
    static constexpr double default_loss_fraction = 0.1486;

    void validate() const; // throws ValidationError
};

// Year-1 hourly production of one array.
struct GenerationSeries {
    std::vector<double> hourly_kwh; // 8760
    double annual_kwh = 0.0;
    double specific_yield_kwh_per_kw = 0.0;
};

// Isotropic-sky transposition of horizontal irradiance components onto a
// tilted plane: beam + sky diffuse + ground reflected, each clamped
// non-negative. Beam is zero when the sun is below the horizon.
double poa_irradiance(const SolarAngles& sun, double ghi_wm2, double dni_wm2,
                      double dhi_wm2, const PvArraySpec& array);

// hourly_kwh[h] = capacity * POA[h]/1000 * (1 - loss), sun evaluated at the
// half-hour midpoint of each interval. Zero capacity yields a zero series.
GenerationSeries generation_series(const WeatherYear& w, const PvArraySpec& array);

// year1 * (1 - rate)^(n-1) for project year n >= 1.
double degraded_annual(double year1_kwh, double rate_per_year, int project_year);

} // namespace districtpv
