#pragma once

#include <stdexcept>
#include <string>

namespace globus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument is outside its admissible domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A required year is missing from an input series.
class DataGap : public Error {
public:
    DataGap(const std::string& what, int year) : Error(what), year_(year) {}
    int year() const noexcept { return year_; }

private:
    int year_;
};

/// Policy/config tables are incomplete or inconsistent.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& msg)
        : Error(file + (line ? ":" + std::to_string(line) : std::string{}) + ": " + msg),
          file_(file), line_(line) {}
    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// Comparison of results that do not describe the same tuple/span.
class InvalidComparison : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace globus
