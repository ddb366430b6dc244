#include <doctest.h>

#include <cmath>
#include <random>

#include "districtpv/errors.hpp"
#include "districtpv/weather.hpp"
#include "support.hpp"

using namespace districtpv;
using namespace testsupport;

TEST_CASE("bundled Tokyo file parses to a canonical site-year") {
    const auto result = parse_epw_file(data_path("tokyo_shinagawa_2018.epw"));
    CHECK(result.weather.latitude_deg == doctest::Approx(35.6).epsilon(0.01));
    CHECK(result.weather.longitude_deg == doctest::Approx(139.74).epsilon(0.01));
    CHECK(result.weather.timezone_hours == doctest::Approx(9.0));
    CHECK(result.weather.records.size() == 8760);
    CHECK(result.fixes.empty());
    CHECK(result.weather.records.front().hour == 0);
    CHECK(result.weather.records.back().hour == 23);
}

TEST_CASE("short file is a record-count error") {
    std::string text = epw_constant_year(20.0);
    text.erase(text.rfind("2018,12,31,24"));
    CHECK_THROWS_AS(parse_epw(text), RecordCountError);
}

TEST_CASE("malformed header reports the line") {
    CHECK_THROWS_AS(parse_epw("NOT A HEADER\n"), ParseError);
    std::string text = epw_constant_year(20.0);
    const auto pos = text.find("35.60");
    text.replace(pos, 5, "north");
    CHECK_THROWS_AS(parse_epw(text), ParseError);
}

TEST_CASE("non-numeric data field carries row and column") {
    std::string text = epw_constant_year(20.0);
    const auto pos = text.find("2018,1,1,1,0,?,20.0");
    text.replace(text.find("20.0", pos), 4, "warm");
    try {
        parse_epw(text);
        FAIL("expected FieldError");
    } catch (const FieldError& e) {
        CHECK(e.row == 9);
        CHECK(e.column == 7);
    }
}

TEST_CASE("leap day is rejected") {
    std::string text = epw_header();
    int emitted = 0;
    for (int m = 1; m <= 12 && emitted < 8760; ++m) {
        int days = districtpv::calendar::days_in_month[static_cast<std::size_t>(m - 1)];
        if (m == 2) days = 29; // bogus leap day
        for (int d = 1; d <= days && emitted < 8760; ++d)
            for (int k = 0; k < 24 && emitted < 8760; ++k, ++emitted)
                text += epw_record(m, d, k + 1, 20.0, 0, 0, 0);
    }
    CHECK_THROWS_WITH_AS(parse_epw(text), doctest::Contains("leap-day"), ParseError);
}

TEST_CASE("out-of-order records are rejected") {
    std::string text = epw_constant_year(20.0);
    const auto a = text.find("2018,1,1,5");
    const auto b = text.find("2018,1,1,6");
    std::string rec_a = text.substr(a, text.find('\n', a) - a + 1);
    std::string rec_b = text.substr(b, text.find('\n', b) - b + 1);
    text.replace(a, rec_a.size() + rec_b.size(), rec_b + rec_a);
    CHECK_THROWS_AS(parse_epw(text), ParseError);
}

TEST_CASE("irradiance sentinel interpolates between neighbours") {
    // dni 500, sentinel, 300 at hours 100..102: the gap takes the neighbour
    // average, 400.
    auto values = [](int h) {
        if (h == 100) return std::vector<double>{20.0, 500.0, 500.0, 0.0};
        if (h == 101) return std::vector<double>{20.0, 400.0, 9999.0, 0.0};
        if (h == 102) return std::vector<double>{20.0, 300.0, 300.0, 0.0};
        return std::vector<double>{20.0, 0.0, 0.0, 0.0};
    };
    const auto result = parse_epw(epw_year(values));
    CHECK(result.fixes.size() == 1);
    CHECK(result.fixes[0].record_index == 101);
    CHECK(result.fixes[0].channel == WeatherChannel::dni);
    CHECK(result.weather.records[101].dni_wm2 == doctest::Approx(400.0));
}

TEST_CASE("leading sentinel run holds the first valid value") {
    auto values = [](int h) {
        if (h <= 1) return std::vector<double>{999.0, 0.0, 0.0, 0.0};
        return std::vector<double>{10.0, 0.0, 0.0, 0.0};
    };
    const auto result = parse_epw(epw_year(values));
    CHECK(result.fixes.size() == 2);
    CHECK(result.weather.records[0].dry_bulb_c == doctest::Approx(10.0));
    CHECK(result.weather.records[1].dry_bulb_c == doctest::Approx(10.0));
}

TEST_CASE("parse -> serialize -> parse round-trips") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> tempx(-150, 350); // tenths of a degree
    std::uniform_int_distribution<int> irr(0, 9000);     // tenths of W/m2
    auto values = [&](int) {
        const double dni = irr(rng) / 10.0;
        const double dhi = std::floor(irr(rng) / 30.0 * 10.0) / 10.0;
        const double ghi = std::floor((dni * 0.6 + dhi) * 10.0) / 10.0;
        return std::vector<double>{tempx(rng) / 10.0, ghi, dni, dhi};
    };
    const WeatherYear first = parse_epw(epw_year(values)).weather;
    const WeatherYear second = parse_epw(serialize_epw(first)).weather;
    CHECK(first == second);
}

TEST_CASE("validation accepts an all-dark year") {
    const auto w = parse_epw(epw_constant_year(20.0)).weather;
    CHECK(validate_weather(w).ok());
}

TEST_CASE("negative irradiance is flagged at its index") {
    auto w = parse_epw(epw_constant_year(20.0)).weather;
    w.records[1234].ghi_wm2 = -5.0;
    const auto report = validate_weather(w);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].record_index == 1234);
    CHECK(report.findings[0].kind == WeatherViolation::negative_irradiance);
}

TEST_CASE("closure mismatch is flagged near 30 degree zenith") {
    // Equinox noon at latitude 30 puts the sun near zenith 30; with DNI 0
    // the closure expects GHI near DHI = 100, not 800.
    auto w = parse_epw(epw_constant_year(20.0)).weather;
    w.latitude_deg = 30.0;
    w.longitude_deg = 0.0;
    w.timezone_hours = 0.0;
    const int h = districtpv::calendar::hour_of_year(3, 20, 12);
    w.records[static_cast<std::size_t>(h)].ghi_wm2 = 800.0;
    w.records[static_cast<std::size_t>(h)].dni_wm2 = 0.0;
    w.records[static_cast<std::size_t>(h)].dhi_wm2 = 100.0;
    const auto report = validate_weather(w);
    bool found = false;
    for (const auto& f : report.findings)
        if (f.record_index == h && f.kind == WeatherViolation::closure_mismatch) found = true;
    CHECK(found);
}

TEST_CASE("implausible dry bulb is flagged") {
    auto w = parse_epw(epw_constant_year(20.0)).weather;
    w.records[50].dry_bulb_c = 72.0;
    const auto report = validate_weather(w);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].record_index == 50);
    CHECK(report.findings[0].kind == WeatherViolation::temperature_range);
}

TEST_CASE("nighttime DNI is flagged") {
    auto w = parse_epw(epw_constant_year(20.0)).weather;
    w.records[2].dni_wm2 = 50.0; // 02:00 in January
    const auto report = validate_weather(w);
    bool found = false;
    for (const auto& f : report.findings)
        if (f.record_index == 2 && f.kind == WeatherViolation::nighttime_dni) found = true;
    CHECK(found);
}

TEST_CASE("degree hours: flat 20 degC year") {
    const auto w = constant_weather(20.0);
    CHECK(degree_hours(w, 18.0, DegreeMode::heating) == doctest::Approx(0.0));
    CHECK(degree_hours(w, 24.0, DegreeMode::cooling) == doctest::Approx(0.0));
}

TEST_CASE("degree hours: hand-checked two-hour fixture") {
    // First two hours 15 and 21 degC, the rest pinned at the base so they
    // contribute nothing: heating = max(3,0)+max(-3,0) = 3, cooling ditto.
    auto w = constant_weather(18.0);
    w.records[0].dry_bulb_c = 15.0;
    w.records[1].dry_bulb_c = 21.0;
    CHECK(degree_hours(w, 18.0, DegreeMode::heating) == doctest::Approx(3.0));
    CHECK(degree_hours(w, 18.0, DegreeMode::cooling) == doctest::Approx(3.0));
}

TEST_CASE("degree hours: base domain") {
    const auto w = constant_weather(20.0);
    CHECK_THROWS_AS(degree_hours(w, -1.0, DegreeMode::heating), DomainError);
    CHECK_THROWS_AS(degree_hours(w, 41.0, DegreeMode::cooling), DomainError);
}

TEST_CASE("mutated input never escapes the library error types") {
    const std::string pristine = epw_constant_year(20.0);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pos(0, pristine.size() - 1);
    std::uniform_int_distribution<int> byte(0, 255);

    for (int trial = 0; trial < 200; ++trial) {
        std::string text = pristine;
        for (int k = 0; k < 3; ++k)
            text[pos(rng)] = static_cast<char>(byte(rng));
        try {
            const auto result = parse_epw(text);
            CHECK(result.weather.records.size() == 8760);
        } catch (const Error&) {
            // rejection is fine; crashes and foreign exceptions are not
        }
    }
}

TEST_CASE("degree hours: partition identity and monotonicity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> temp(-10.0, 40.0);
    auto w = constant_weather(0.0);
    for (auto& r : w.records) r.dry_bulb_c = temp(rng);

    for (double base : {5.0, 18.0, 24.0, 33.0}) {
        const double heat = degree_hours(w, base, DegreeMode::heating);
        const double cool = degree_hours(w, base, DegreeMode::cooling);
        double abs_sum = 0.0;
        for (const auto& r : w.records) abs_sum += std::abs(r.dry_bulb_c - base);
        CHECK(heat + cool == doctest::Approx(abs_sum).epsilon(1e-12));
    }

    CHECK(degree_hours(w, 20.0, DegreeMode::heating) >=
          degree_hours(w, 18.0, DegreeMode::heating));
}
