#include "districtpv/solar_pv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "districtpv/calendar.hpp"
#include "districtpv/errors.hpp"

namespace districtpv {

void PvArraySpec::validate() const {
    std::string bad;
    if (capacity_kw < 0.0) bad += " capacity<0";
    if (tilt_deg < 0.0 || tilt_deg > 90.0) bad += " tilt outside [0,90]";
    if (azimuth_deg < 0.0 || azimuth_deg >= 360.0) bad += " azimuth outside [0,360)";
    if (system_loss_fraction < 0.0 || system_loss_fraction >= 1.0) bad += " loss outside [0,1)";
    if (degradation_per_year < 0.0 || degradation_per_year > 0.05)
        bad += " degradation outside [0,0.05]";
    if (ground_albedo < 0.0 || ground_albedo > 1.0) bad += " albedo outside [0,1]";
    if (!bad.empty()) throw ValidationError("invalid array spec:" + bad);
}

double poa_irradiance(const SolarAngles& sun, double ghi_wm2, double dni_wm2,
                      double dhi_wm2, const PvArraySpec& array) {
    const double tilt_rad = array.tilt_deg * 3.14159265358979323846 / 180.0;
    const double cos_tilt = std::cos(tilt_rad);

    double beam = 0.0;
    if (sun.zenith_deg < 90.0) {
        const double cos_inc = incidence_cosine(sun, array.tilt_deg, array.azimuth_deg);
        beam = dni_wm2 * std::max(cos_inc, 0.0);
    }
    const double sky = dhi_wm2 * (1.0 + cos_tilt) / 2.0;
    const double ground = ghi_wm2 * array.ground_albedo * (1.0 - cos_tilt) / 2.0;
    return std::max(beam + sky + ground, 0.0);
}

GenerationSeries generation_series(const WeatherYear& w, const PvArraySpec& array) {
    array.validate();
    GenerationSeries g;
    g.hourly_kwh.assign(w.records.size(), 0.0);
    if (array.capacity_kw == 0.0) return g;

    const double derate = 1.0 - array.system_loss_fraction;
    for (std::size_t h = 0; h < w.records.size(); ++h) {
        const auto& r = w.records[h];
        const auto sun = sun_position(w.latitude_deg, w.longitude_deg, w.timezone_hours,
                                      r.month, r.day, r.hour + 0.5);
        const double poa = poa_irradiance(sun, r.ghi_wm2, r.dni_wm2, r.dhi_wm2, array);
        const double kwh = array.capacity_kw * poa / 1000.0 * derate;
        g.hourly_kwh[h] = kwh;
        g.annual_kwh += kwh;
    }
    g.specific_yield_kwh_per_kw = g.annual_kwh / array.capacity_kw;
    return g;
}

double degraded_annual(double year1_kwh, double rate_per_year, int project_year) {
    if (project_year < 1) throw DomainError("project year must be >= 1");
    return year1_kwh * std::pow(1.0 - rate_per_year, project_year - 1);
}

} // namespace districtpv
