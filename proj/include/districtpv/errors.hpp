#pragma once

#include <stdexcept>
#include <string>

namespace districtpv {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally broken input text (bad header, bad calendar sequence, ...).
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

// Input has the wrong number of hourly records.
struct RecordCountError : Error {
    RecordCountError(std::size_t expected, std::size_t actual)
        : Error("expected " + std::to_string(expected) + " hourly records, got " +
                std::to_string(actual)),
          expected(expected), actual(actual) {}
    std::size_t expected;
    std::size_t actual;
};

// A field that should be numeric is not.
struct FieldError : Error {
    FieldError(const std::string& msg, int row, int column)
        : Error(msg + " (row " + std::to_string(row) + ", column " + std::to_string(column) + ")"),
          row(row), column(column) {}
    int row;
    int column;
};

// Argument outside its mathematical domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A value object violates its own invariants; message lists the offenders.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Two series that must be conformable are not.
struct ShapeError : Error {
    ShapeError(const std::string& msg, std::size_t lhs, std::size_t rhs)
        : Error(msg + " (" + std::to_string(lhs) + " vs " + std::to_string(rhs) + ")") {}
};

// Calibration target cannot be reached from the given weather/geometry.
struct CalibrationError : Error {
    explicit CalibrationError(const std::string& msg) : Error(msg) {}
};

// Command line misuse.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// File system failure, message carries the path.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace districtpv
