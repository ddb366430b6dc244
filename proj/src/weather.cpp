#include "districtpv/weather.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "districtpv/calendar.hpp"
#include "districtpv/errors.hpp"
#include "districtpv/sun_position.hpp"

namespace districtpv {

namespace {

constexpr double kIrradianceSentinel = 9999.0;
constexpr double kDryBulbSentinel = 99.9;

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view field, int row, int column) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw FieldError("non-numeric field '" + std::string(field) + "'", row, column);
    return value;
}

int parse_int(std::string_view field, int row, int column) {
    field = trim(field);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw FieldError("non-integer field '" + std::string(field) + "'", row, column);
    return value;
}

double channel_value(const HourlyWeather& r, WeatherChannel c) {
    switch (c) {
        case WeatherChannel::dry_bulb: return r.dry_bulb_c;
        case WeatherChannel::ghi: return r.ghi_wm2;
        case WeatherChannel::dni: return r.dni_wm2;
        default: return r.dhi_wm2;
    }
}

void set_channel(HourlyWeather& r, WeatherChannel c, double v) {
    switch (c) {
        case WeatherChannel::dry_bulb: r.dry_bulb_c = v; break;
        case WeatherChannel::ghi: r.ghi_wm2 = v; break;
        case WeatherChannel::dni: r.dni_wm2 = v; break;
        default: r.dhi_wm2 = v; break;
    }
}

bool is_missing(WeatherChannel c, double v) {
    if (c == WeatherChannel::dry_bulb) return v == kDryBulbSentinel || v == 999.0;
    return v == kIrradianceSentinel;
}

// Replace sentinel runs by linear interpolation between the nearest valid
// neighbours; ends are held flat at the nearest valid value.
void interpolate_channel(std::vector<HourlyWeather>& records, WeatherChannel channel,
                         std::vector<SentinelFix>& fixes) {
    const int n = static_cast<int>(records.size());
    std::vector<int> missing;
    for (int i = 0; i < n; ++i)
        if (is_missing(channel, channel_value(records[static_cast<std::size_t>(i)], channel)))
            missing.push_back(i);
    if (missing.empty()) return;
    if (static_cast<int>(missing.size()) == n)
        throw ParseError("every record is a missing-value sentinel for one channel", 9);

    auto valid_before = [&](int i) {
        for (int j = i - 1; j >= 0; --j)
            if (!is_missing(channel, channel_value(records[static_cast<std::size_t>(j)], channel)))
                return j;
        return -1;
    };
    auto valid_after = [&](int i) {
        for (int j = i + 1; j < n; ++j)
            if (!is_missing(channel, channel_value(records[static_cast<std::size_t>(j)], channel)))
                return j;
        return -1;
    };

    // Work on a copy of the indices so interpolated values never feed later
    // interpolations.
    std::vector<double> replacement(missing.size());
    for (std::size_t k = 0; k < missing.size(); ++k) {
        const int i = missing[k];
        const int lo = valid_before(i);
        const int hi = valid_after(i);
        if (lo < 0)
            replacement[k] = channel_value(records[static_cast<std::size_t>(hi)], channel);
        else if (hi < 0)
            replacement[k] = channel_value(records[static_cast<std::size_t>(lo)], channel);
        else {
            const double a = channel_value(records[static_cast<std::size_t>(lo)], channel);
            const double b = channel_value(records[static_cast<std::size_t>(hi)], channel);
            const double t = static_cast<double>(i - lo) / static_cast<double>(hi - lo);
            replacement[k] = a + (b - a) * t;
        }
    }
    for (std::size_t k = 0; k < missing.size(); ++k) {
        set_channel(records[static_cast<std::size_t>(missing[k])], channel, replacement[k]);
        fixes.push_back({missing[k], channel, replacement[k]});
    }
}

} // namespace

EpwParseResult parse_epw(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

    if (lines.size() < 8) throw ParseError("EPW header requires 8 lines", static_cast<int>(lines.size()));

    const auto loc = split_csv(trim(lines[0]));
    if (loc.size() < 10 || trim(loc[0]) != "LOCATION")
        throw ParseError("malformed LOCATION header", 1);

    EpwParseResult result;
    WeatherYear& w = result.weather;
    try {
        w.latitude_deg = parse_double(loc[6], 1, 7);
        w.longitude_deg = parse_double(loc[7], 1, 8);
        w.timezone_hours = parse_double(loc[8], 1, 9);
        w.elevation_m = parse_double(loc[9], 1, 10);
    } catch (const FieldError& e) {
        throw ParseError(std::string("malformed LOCATION header: ") + e.what(), 1);
    }

    if (w.latitude_deg < -90.0 || w.latitude_deg > 90.0)
        throw ParseError("latitude out of range", 1);
    if (w.longitude_deg < -180.0 || w.longitude_deg > 180.0)
        throw ParseError("longitude out of range", 1);

    const std::size_t n_records = lines.size() - 8;
    if (n_records != calendar::hours_per_year)
        throw RecordCountError(calendar::hours_per_year, n_records);

    w.records.reserve(calendar::hours_per_year);
    for (std::size_t i = 8; i < lines.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        const auto fields = split_csv(trim(lines[i]));
        if (fields.size() < 16)
            throw ParseError("data record has fewer than 16 fields", row);

        HourlyWeather rec;
        rec.month = parse_int(fields[1], row, 2);
        rec.day = parse_int(fields[2], row, 3);
        const int epw_hour = parse_int(fields[3], row, 4);
        rec.dry_bulb_c = parse_double(fields[6], row, 7);
        rec.ghi_wm2 = parse_double(fields[13], row, 14);
        rec.dni_wm2 = parse_double(fields[14], row, 15);
        rec.dhi_wm2 = parse_double(fields[15], row, 16);

        if (rec.month == 2 && rec.day == 29)
            throw ParseError("leap-day record rejected; canonical year is 8760 hours", row);
        if (rec.month < 1 || rec.month > 12 || rec.day < 1 ||
            rec.day > calendar::days_in_month[static_cast<std::size_t>(rec.month - 1)])
            throw ParseError("invalid calendar date in record", row);
        if (epw_hour < 1 || epw_hour > 24)
            throw ParseError("hour field must be 1..24", row);
        rec.hour = epw_hour - 1; // end-of-interval label -> start-of-interval

        const int expected = static_cast<int>(w.records.size());
        if (calendar::hour_of_year(rec.month, rec.day, rec.hour) != expected)
            throw ParseError("records must advance by exactly one hour", row);

        w.records.push_back(rec);
    }

    for (const auto channel : {WeatherChannel::dry_bulb, WeatherChannel::ghi,
                               WeatherChannel::dni, WeatherChannel::dhi})
        interpolate_channel(w.records, channel, result.fixes);

    return result;
}

EpwParseResult parse_epw_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open weather file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_epw(buf.str());
}

std::string serialize_epw(const WeatherYear& w) {
    std::string out;
    out.reserve(64 * (calendar::hours_per_year + 8));
    char line[256];

    std::snprintf(line, sizeof line,
                  "LOCATION,Site,Region,Country,Synthetic,000000,%.4f,%.4f,%.2f,%.1f\n",
                  w.latitude_deg, w.longitude_deg, w.timezone_hours, w.elevation_m);
    out += line;
    out += "DESIGN CONDITIONS,0\n";
    out += "TYPICAL/EXTREME PERIODS,0\n";
    out += "GROUND TEMPERATURES,0\n";
    out += "HOLIDAYS/DAYLIGHT SAVINGS,No,0,0,0\n";
    out += "COMMENTS 1,serialized site-year\n";
    out += "COMMENTS 2,\n";
    out += "DATA PERIODS,1,1,Data,Monday, 1/ 1,12/31\n";

    for (const auto& r : w.records) {
        // Field layout follows EPW: dry bulb in field 7, GHI/DNI/DHI in
        // 14/15/16; unused numeric fields are zero.
        std::snprintf(line, sizeof line,
                      "2018,%d,%d,%d,0,?,%.1f,0.0,0,0,0,0,0,%.1f,%.1f,%.1f\n",
                      r.month, r.day, r.hour + 1, r.dry_bulb_c, r.ghi_wm2, r.dni_wm2,
                      r.dhi_wm2);
        out += line;
    }
    return out;
}

ValidationReport validate_weather(const WeatherYear& w) {
    ValidationReport report;
    char detail[160];

    for (std::size_t i = 0; i < w.records.size(); ++i) {
        const auto& r = w.records[i];
        const int idx = static_cast<int>(i);

        if (r.dry_bulb_c < -60.0 || r.dry_bulb_c > 60.0) {
            std::snprintf(detail, sizeof detail, "dry bulb %.1f degC outside [-60, 60]",
                          r.dry_bulb_c);
            report.findings.push_back({idx, WeatherViolation::temperature_range, detail});
        }

        if (r.ghi_wm2 < 0.0 || r.dni_wm2 < 0.0 || r.dhi_wm2 < 0.0) {
            std::snprintf(detail, sizeof detail, "negative irradiance (ghi=%.1f dni=%.1f dhi=%.1f)",
                          r.ghi_wm2, r.dni_wm2, r.dhi_wm2);
            report.findings.push_back({idx, WeatherViolation::negative_irradiance, detail});
            continue;
        }

        const auto sun = sun_position(w.latitude_deg, w.longitude_deg, w.timezone_hours,
                                      r.month, r.day, r.hour + 0.5);

        if (sun.zenith_deg > 95.0 && r.dni_wm2 > 0.0) {
            std::snprintf(detail, sizeof detail, "DNI %.1f W/m2 with sun %.1f deg below horizon",
                          r.dni_wm2, sun.zenith_deg - 90.0);
            report.findings.push_back({idx, WeatherViolation::nighttime_dni, detail});
        }

        if (r.ghi_wm2 > 0.0 && r.dni_wm2 == 0.0 && r.dhi_wm2 == 0.0) {
            std::snprintf(detail, sizeof detail, "GHI %.1f W/m2 with zero DNI and DHI", r.ghi_wm2);
            report.findings.push_back({idx, WeatherViolation::zero_inconsistency, detail});
        }

        if (r.ghi_wm2 > 200.0) {
            const double cosz = std::cos(sun.zenith_deg * 3.14159265358979323846 / 180.0);
            const double expected = r.dni_wm2 * std::max(cosz, 0.0) + r.dhi_wm2;
            if (std::abs(r.ghi_wm2 - expected) > 0.20 * r.ghi_wm2) {
                std::snprintf(detail, sizeof detail,
                              "GHI %.1f inconsistent with DNI*cos(z)+DHI = %.1f", r.ghi_wm2,
                              expected);
                report.findings.push_back({idx, WeatherViolation::closure_mismatch, detail});
            }
        }
    }
    return report;
}

double degree_hours(const WeatherYear& w, double base_c, DegreeMode mode) {
    if (base_c < 0.0 || base_c > 40.0)
        throw DomainError("degree-hour base must lie in [0, 40] degC");
    double sum = 0.0;
    for (const auto& r : w.records) {
        const double d = (mode == DegreeMode::heating) ? base_c - r.dry_bulb_c
                                                       : r.dry_bulb_c - base_c;
        if (d > 0.0) sum += d;
    }
    return sum;
}

} // namespace districtpv
