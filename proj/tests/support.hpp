#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "districtpv/calendar.hpp"
#include "districtpv/weather.hpp"

namespace testsupport {

inline std::string data_dir() { return DISTRICTPV_DATA_DIR; }

inline std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

inline std::string scenario_path(const std::string& name) {
    return data_dir() + "/scenarios/" + name;
}

// The bundled site-year, parsed once.
inline const districtpv::WeatherYear& tokyo() {
    static const districtpv::WeatherYear w =
        districtpv::parse_epw_file(data_path("tokyo_shinagawa_2018.epw")).weather;
    return w;
}

inline std::string epw_header(double lat = 35.6, double lon = 139.74, double tz = 9.0,
                              double elev = 8.0) {
    char line[160];
    std::snprintf(line, sizeof line, "LOCATION,Test,Region,JPN,Synthetic,000000,%.2f,%.2f,%.1f,%.1f\n",
                  lat, lon, tz, elev);
    std::string s = line;
    s += "DESIGN CONDITIONS,0\n";
    s += "TYPICAL/EXTREME PERIODS,0\n";
    s += "GROUND TEMPERATURES,0\n";
    s += "HOLIDAYS/DAYLIGHT SAVINGS,No,0,0,0\n";
    s += "COMMENTS 1,test fixture\n";
    s += "COMMENTS 2,\n";
    s += "DATA PERIODS,1,1,Data,Monday, 1/ 1,12/31\n";
    return s;
}

inline std::string epw_record(int month, int day, int epw_hour, double temp, double ghi,
                              double dni, double dhi) {
    char line[160];
    std::snprintf(line, sizeof line, "2018,%d,%d,%d,0,?,%.1f,0.0,0,0,0,0,0,%.1f,%.1f,%.1f\n",
                  month, day, epw_hour, temp, ghi, dni, dhi);
    return line;
}

// Full canonical year of EPW text; per-hour values come from the callback
// (hour_of_year) -> {temp, ghi, dni, dhi}.
template <typename F>
std::string epw_year(F&& value_at) {
    std::string text = epw_header();
    int h = 0;
    for (int m = 1; m <= 12; ++m)
        for (int d = 1; d <= districtpv::calendar::days_in_month[static_cast<std::size_t>(m - 1)];
             ++d)
            for (int k = 0; k < 24; ++k, ++h) {
                const auto v = value_at(h);
                text += epw_record(m, d, k + 1, v[0], v[1], v[2], v[3]);
            }
    return text;
}

inline std::string epw_constant_year(double temp) {
    return epw_year([&](int) { return std::vector<double>{temp, 0.0, 0.0, 0.0}; });
}

// A WeatherYear built directly (no parsing), constant temperature, zero sun.
inline districtpv::WeatherYear constant_weather(double temp) {
    districtpv::WeatherYear w;
    w.latitude_deg = 35.6;
    w.longitude_deg = 139.74;
    w.timezone_hours = 9.0;
    for (int m = 1; m <= 12; ++m)
        for (int d = 1; d <= districtpv::calendar::days_in_month[static_cast<std::size_t>(m - 1)];
             ++d)
            for (int k = 0; k < 24; ++k)
                w.records.push_back({m, d, k, temp, 0.0, 0.0, 0.0});
    return w;
}

} // namespace testsupport
