#pragma once

namespace districtpv {

// Apparent sun position. Zenith 0 = overhead, 90 = horizon; azimuth is
// degrees clockwise from north (90 = east, 180 = south).
struct SolarAngles {
    double zenith_deg;
    double azimuth_deg;
};

// Sun position for a calendar instant in local standard time.
//
// latitude/longitude in degrees (north/east positive), tz_hours the UTC
// offset of local standard time, hour a fractional clock hour (0..24).
// Fourier-series declination and equation of time; accurate to well under
// half a degree over 1950-2050.
SolarAngles sun_position(double latitude_deg, double longitude_deg, double tz_hours,
                         int month, int day, double hour);

// Cosine of the angle between the sun and the normal of a plane tilted
// tilt_deg from horizontal, facing azimuth_deg (clockwise from north).
// Negative when the sun is behind the plane.
double incidence_cosine(const SolarAngles& sun, double tilt_deg, double azimuth_deg);

} // namespace districtpv
