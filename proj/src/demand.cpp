#include "districtpv/demand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "districtpv/calendar.hpp"
#include "districtpv/errors.hpp"

namespace districtpv {

std::array<double, 168> DemandParams::default_weekly_schedule() {
    std::array<double, 168> s{};
    for (int h = 0; h < 168; ++h) {
        const int dow = h / 24; // 0 = Monday
        const int hod = h % 24;
        if (dow >= 5)
            s[static_cast<std::size_t>(h)] = 0.40;
        else if (hod >= 8 && hod < 19)
            s[static_cast<std::size_t>(h)] = 1.0;
        else
            s[static_cast<std::size_t>(h)] = 0.15;
    }
    return s;
}

void DemandParams::validate() const {
    std::string bad;
    if (lighting_intensity_kwh_m2 < 0.0) bad += " lighting intensity";
    if (equipment_intensity_kwh_m2 < 0.0) bad += " equipment intensity";
    if (heating_envelope_w_m2k < 0.0) bad += " heating coefficient";
    if (cooling_gain_w_m2k < 0.0) bad += " cooling coefficient";
    if (heating_cop <= 1.0) bad += " heating COP";
    if (cooling_cop <= 1.0) bad += " cooling COP";
    for (double v : weekly_schedule)
        if (v < 0.0 || v > 1.0) {
            bad += " schedule value";
            break;
        }
    if (!bad.empty()) throw ValidationError("invalid demand params:" + bad);
}

std::vector<double> DemandSeries::total_series() const {
    std::vector<double> t(lighting_kwh.size());
    for (std::size_t h = 0; h < t.size(); ++h) t[h] = total_at(h);
    return t;
}

namespace {

double annual_schedule_sum(const std::array<double, 168>& weekly) {
    double sum = 0.0;
    for (int h = 0; h < calendar::hours_per_year; ++h)
        sum += weekly[static_cast<std::size_t>(calendar::week_hour(h))];
    return sum;
}

} // namespace

DemandSeries synthesize_demand(const DistrictMetrics& m, const WeatherYear& w,
                               const DemandParams& p) {
    p.validate();
    const std::size_t n = w.records.size();

    DemandSeries d;
    d.lighting_kwh.assign(n, 0.0);
    d.equipment_kwh.assign(n, 0.0);
    d.heating_kwh.assign(n, 0.0);
    d.cooling_kwh.assign(n, 0.0);

    const double floor = m.total_floor_area_m2;
    const double surface = m.above_ground_surface_m2;
    const double sched_sum = annual_schedule_sum(p.weekly_schedule);

    for (std::size_t h = 0; h < n; ++h) {
        const double sched =
            p.weekly_schedule[static_cast<std::size_t>(calendar::week_hour(static_cast<int>(h)))];
        const double t = w.records[h].dry_bulb_c;

        if (sched_sum > 0.0) {
            d.lighting_kwh[h] = p.lighting_intensity_kwh_m2 * floor * sched / sched_sum;
            d.equipment_kwh[h] = p.equipment_intensity_kwh_m2 * floor * sched / sched_sum;
        }

        const double heat_deg = std::max(p.heating_base_c - t, 0.0);
        d.heating_kwh[h] =
            p.heating_envelope_w_m2k * surface * heat_deg / (1000.0 * p.heating_cop);

        const double cool_deg = std::max(t - p.cooling_base_c, 0.0);
        const double envelope_gain = p.heating_envelope_w_m2k * surface * cool_deg;
        const double internal_gain = p.cooling_gain_w_m2k * floor * sched * cool_deg;
        d.cooling_kwh[h] = (envelope_gain + internal_gain) / (1000.0 * p.cooling_cop);
    }

    d.lighting_total_kwh = std::accumulate(d.lighting_kwh.begin(), d.lighting_kwh.end(), 0.0);
    d.equipment_total_kwh = std::accumulate(d.equipment_kwh.begin(), d.equipment_kwh.end(), 0.0);
    d.heating_total_kwh = std::accumulate(d.heating_kwh.begin(), d.heating_kwh.end(), 0.0);
    d.cooling_total_kwh = std::accumulate(d.cooling_kwh.begin(), d.cooling_kwh.end(), 0.0);
    d.total_kwh = d.lighting_total_kwh + d.equipment_total_kwh + d.heating_total_kwh +
                  d.cooling_total_kwh;
    d.unit_floor_consumption_kwh_m2 = floor > 0.0 ? d.total_kwh / floor : 0.0;
    return d;
}

DemandParams calibrate(const DistrictMetrics& m, const WeatherYear& w,
                       const DemandTargets& targets, const DemandParams& base) {
    if (targets.lighting_kwh < 0.0 || targets.equipment_kwh < 0.0 ||
        targets.heating_kwh < 0.0 || targets.cooling_kwh < 0.0)
        throw CalibrationError("calibration targets must be non-negative");
    if (m.total_floor_area_m2 <= 0.0)
        throw CalibrationError("calibration requires positive floor area");

    DemandParams p = base;
    p.lighting_intensity_kwh_m2 = targets.lighting_kwh / m.total_floor_area_m2;
    p.equipment_intensity_kwh_m2 = targets.equipment_kwh / m.total_floor_area_m2;

    // Occupancy-unweighted and occupancy-weighted degree-hours carry the
    // linear response of the two thermal components.
    double hdh = 0.0, cdh = 0.0, cdh_sched = 0.0;
    for (std::size_t h = 0; h < w.records.size(); ++h) {
        const double t = w.records[h].dry_bulb_c;
        hdh += std::max(p.heating_base_c - t, 0.0);
        const double cd = std::max(t - p.cooling_base_c, 0.0);
        cdh += cd;
        cdh_sched +=
            cd *
            p.weekly_schedule[static_cast<std::size_t>(calendar::week_hour(static_cast<int>(h)))];
    }

    if (targets.heating_kwh > 0.0) {
        if (hdh <= 0.0 || m.above_ground_surface_m2 <= 0.0)
            throw CalibrationError("no heating degree-hours to carry the heating target");
        p.heating_envelope_w_m2k =
            targets.heating_kwh * 1000.0 * p.heating_cop / (m.above_ground_surface_m2 * hdh);
    } else {
        p.heating_envelope_w_m2k = 0.0;
    }

    if (targets.cooling_kwh > 0.0) {
        if (cdh_sched <= 0.0)
            throw CalibrationError("no cooling degree-hours to carry the cooling target");
        const double envelope_part =
            p.heating_envelope_w_m2k * m.above_ground_surface_m2 * cdh / (1000.0 * p.cooling_cop);
        const double gain_target = targets.cooling_kwh - envelope_part;
        if (gain_target < 0.0)
            throw CalibrationError("envelope gains alone exceed the cooling target");
        p.cooling_gain_w_m2k =
            gain_target * 1000.0 * p.cooling_cop / (m.total_floor_area_m2 * cdh_sched);
    } else {
        p.cooling_gain_w_m2k = 0.0;
    }

    return p;
}

DemandBreakdown annual_breakdown(const DemandSeries& d) {
    DemandBreakdown b;
    b.lighting_kwh = d.lighting_total_kwh;
    b.equipment_kwh = d.equipment_total_kwh;
    b.heating_kwh = d.heating_total_kwh;
    b.cooling_kwh = d.cooling_total_kwh;
    b.total_kwh = d.total_kwh;
    if (b.total_kwh > 0.0) {
        b.lighting_share_pct = b.lighting_kwh / b.total_kwh * 100.0;
        b.equipment_share_pct = b.equipment_kwh / b.total_kwh * 100.0;
        b.heating_share_pct = b.heating_kwh / b.total_kwh * 100.0;
        b.cooling_share_pct = b.cooling_kwh / b.total_kwh * 100.0;
    }
    return b;
}

} // namespace districtpv
