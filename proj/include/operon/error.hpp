#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operon {

/// Base class for every error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input exceeds a documented size cap (variable count, enumeration size).
class LimitError : public Error {
public:
    using Error::Error;
};

} // namespace operon
