#include "districtpv/sun_position.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "districtpv/calendar.hpp"
#include "districtpv/errors.hpp"

namespace districtpv {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double deg2rad(double d) { return d * kPi / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / kPi; }
} // namespace

SolarAngles sun_position(double latitude_deg, double longitude_deg, double tz_hours,
                         int month, int day, double hour) {
    if (month < 1 || month > 12 || day < 1 ||
        day > calendar::days_in_month[static_cast<std::size_t>(month - 1)])
        throw DomainError("invalid calendar date " + std::to_string(month) + "/" +
                          std::to_string(day));

    const int doy = calendar::day_of_year(month, day);

    // Fractional year in radians, hour-resolved.
    const double gamma = 2.0 * kPi / 365.0 * (doy - 1 + (hour - 12.0) / 24.0);

    // Equation of time (minutes) and declination (radians), Spencer series.
    const double eqtime =
        229.18 * (0.000075 + 0.001868 * std::cos(gamma) - 0.032077 * std::sin(gamma) -
                  0.014615 * std::cos(2 * gamma) - 0.040849 * std::sin(2 * gamma));
    const double decl =
        0.006918 - 0.399912 * std::cos(gamma) + 0.070257 * std::sin(gamma) -
        0.006758 * std::cos(2 * gamma) + 0.000907 * std::sin(2 * gamma) -
        0.002697 * std::cos(3 * gamma) + 0.00148 * std::sin(3 * gamma);

    // True solar time in minutes, then hour angle: 0 at solar noon,
    // negative mornings.
    const double time_offset = eqtime + 4.0 * longitude_deg - 60.0 * tz_hours;
    const double tst = hour * 60.0 + time_offset;
    const double hour_angle = deg2rad(tst / 4.0 - 180.0);

    const double lat = deg2rad(latitude_deg);
    double cos_zenith = std::sin(lat) * std::sin(decl) +
                        std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
    cos_zenith = std::clamp(cos_zenith, -1.0, 1.0);
    const double zenith = std::acos(cos_zenith);

    // Azimuth clockwise from north; atan2 form is stable at the poles of
    // the more common acos formula.
    const double az_south = std::atan2(std::sin(hour_angle),
                                       std::cos(hour_angle) * std::sin(lat) -
                                           std::tan(decl) * std::cos(lat));
    double azimuth = 180.0 + rad2deg(az_south);
    if (azimuth >= 360.0) azimuth -= 360.0;
    if (azimuth < 0.0) azimuth += 360.0;

    return {rad2deg(zenith), azimuth};
}

double incidence_cosine(const SolarAngles& sun, double tilt_deg, double azimuth_deg) {
    const double z = deg2rad(sun.zenith_deg);
    const double beta = deg2rad(tilt_deg);
    const double daz = deg2rad(sun.azimuth_deg - azimuth_deg);
    return std::cos(z) * std::cos(beta) + std::sin(z) * std::sin(beta) * std::cos(daz);
}

} // namespace districtpv
