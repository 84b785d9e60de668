#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkgi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid graph construction or an out-of-range vertex argument.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 text. `position()` is the zero-based byte offset
/// within the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Dataset-level failure; carries the 1-based line number.
class DatasetError : public Error {
public:
    DatasetError(const std::string& what, std::size_t line)
        : Error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refused a graph above its vertex cap.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (e.g. an isomorphism certificate
/// did not verify). Never expected in correct operation.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace walkgi
