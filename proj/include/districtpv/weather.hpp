#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace districtpv {

// One hour of site weather. Hour is 0..23 start-of-interval in local
// standard time (EPW labels intervals 1..24 end-of-interval; the parser
// converts).
struct HourlyWeather {
    int month = 1;
    int day = 1;
    int hour = 0;
    double dry_bulb_c = 0.0;
    double ghi_wm2 = 0.0;
    double dni_wm2 = 0.0;
    double dhi_wm2 = 0.0;

    bool operator==(const HourlyWeather&) const = default;
};

// A canonical 8760-hour site-year.
struct WeatherYear {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double timezone_hours = 0.0;
    double elevation_m = 0.0;
    std::vector<HourlyWeather> records;

    bool operator==(const WeatherYear&) const = default;
};

// Channels that can carry a missing-value sentinel.
enum class WeatherChannel { dry_bulb, ghi, dni, dhi };

// One sentinel that was replaced by interpolation during parsing.
struct SentinelFix {
    int record_index;
    WeatherChannel channel;
    double replacement;
};

struct EpwParseResult {
    WeatherYear weather;
    std::vector<SentinelFix> fixes;
};

// Parse EPW text: 8 header lines, then 8760 comma-separated hourly records.
// Site metadata comes from the LOCATION line; per-record dry bulb, GHI, DNI
// and DHI from data fields 7/14/15/16 (1-based). Missing-value sentinels
// (9999 irradiance, 99.9 dry bulb) are linearly interpolated from the
// nearest valid neighbours and reported in `fixes`. Leap-day records are
// rejected.
EpwParseResult parse_epw(std::string_view text);
EpwParseResult parse_epw_file(const std::string& path);

// Canonical EPW text for a WeatherYear; parse(serialize(w)).weather == w
// for any year whose values carry at most one decimal (all parsed files do
// after the serializer's own normalization).
std::string serialize_epw(const WeatherYear& w);

enum class WeatherViolation {
    negative_irradiance,
    temperature_range,   // dry bulb outside [-60, 60] degC
    nighttime_dni,       // nonzero DNI with solar zenith beyond 95 degrees
    closure_mismatch,    // GHI vs DNI*cos(z)+DHI off by >20% at GHI>200
    zero_inconsistency,  // nonzero GHI while DNI and DHI are both zero
};

struct WeatherFinding {
    int record_index;
    WeatherViolation kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<WeatherFinding> findings;
    bool ok() const { return findings.empty(); }
};

// Report-only physical plausibility checks; never mutates.
ValidationReport validate_weather(const WeatherYear& w);

enum class DegreeMode { heating, cooling };

// Sum of max(base - T, 0) (heating) or max(T - base, 0) (cooling) over the
// year, in degC*hours. Base must lie in [0, 40] degC.
double degree_hours(const WeatherYear& w, double base_c, DegreeMode mode);

} // namespace districtpv
