#pragma once

#include <stdexcept>
#include <string>

namespace fabry {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query reached past the finite horizon of an IndexSet.
class HorizonExceeded : public Error {
public:
    using Error::Error;
};

/// A product evaluation was requested at |z| too large for the truncation.
class TruncationInsufficient : public Error {
public:
    using Error::Error;
};

/// A density scan has no feasible x range for the given horizon.
class InsufficientHorizon : public Error {
public:
    using Error::Error;
};

/// Too few non-zero coefficients for an estimate.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message names the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace fabry
