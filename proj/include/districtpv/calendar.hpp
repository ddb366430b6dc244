#pragma once

#include <array>

namespace districtpv::calendar {

// Canonical non-leap year, 8760 hours.
inline constexpr int hours_per_year = 8760;
inline constexpr int hours_per_week = 168;

inline constexpr std::array<int, 12> days_in_month = {31, 28, 31, 30, 31, 30,
                                                      31, 31, 30, 31, 30, 31};

// 1-based month/day -> 1..365
constexpr int day_of_year(int month, int day) {
    int doy = day;
    for (int m = 0; m < month - 1; ++m)
        doy += days_in_month[static_cast<std::size_t>(m)];
    return doy;
}

// 1..365 -> {month, day}, both 1-based
struct MonthDay {
    int month;
    int day;
};

constexpr MonthDay month_day(int doy) {
    int m = 0;
    while (doy > days_in_month[static_cast<std::size_t>(m)]) {
        doy -= days_in_month[static_cast<std::size_t>(m)];
        ++m;
    }
    return {m + 1, doy};
}

// Hour index within the canonical year, hour is 0..23 start-of-interval.
constexpr int hour_of_year(int month, int day, int hour) {
    return (day_of_year(month, day) - 1) * 24 + hour;
}

// The canonical year is aligned so day 1 is a Monday; index 0 of a weekly
// profile is Monday 00:00.
constexpr int week_hour(int hour_of_year) { return hour_of_year % hours_per_week; }

constexpr bool is_weekend(int hour_of_year) {
    const int dow = (hour_of_year / 24) % 7; // 0 = Monday
    return dow >= 5;
}

} // namespace districtpv::calendar
