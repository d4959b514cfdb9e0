#pragma once

#include <stdexcept>
#include <string>

namespace lfc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed-loop denominator vanished: the feedback interconnection has no
/// well-defined rational solution.
class AlgebraicLoopError : public Error {
public:
    using Error::Error;
};

/// dc evaluation requested on a transfer function with a pole at s = 0.
/// Callers that expect an integrator in the loop should evaluate s*G instead.
class PoleAtOriginError : public Error {
public:
    using Error::Error;
};

/// PI controller requested with Kp = Ki = 0.
class ZeroControllerError : public Error {
public:
    using Error::Error;
};

/// Hydro governor compensation enabled but R_t / T_r were not supplied.
class MissingCompensationParams : public Error {
public:
    using Error::Error;
};

/// A tie line or disturbance references an area id that does not exist.
class UnknownAreaRef : public Error {
public:
    using Error::Error;
};

/// Every point of a tuning grid produced a diverging closed loop.
class AllUnstableError : public Error {
public:
    using Error::Error;
};

/// A plot request names a signal the result does not contain.
class UnknownSignalError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure while writing or reading results.
class IoError : public Error {
public:
    using Error::Error;
};

/// Scenario file could not be parsed. Carries the source location.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, const std::string& detail)
        : Error(file + ":" + std::to_string(line) + ": " + detail),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// Scenario file parsed but violates a model invariant. Carries the source
/// location and the section the offending value belongs to.
class ValidationError : public Error {
public:
    ValidationError(std::string file, int line, std::string section,
                    const std::string& detail)
        : Error(file + ":" + std::to_string(line) + ": [" + section + "] " + detail),
          file_(std::move(file)), line_(line), section_(std::move(section)) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    const std::string& section() const { return section_; }

private:
    std::string file_;
    int line_;
    std::string section_;
};

} // namespace lfc
