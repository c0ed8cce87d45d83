#pragma once

#include <stdexcept>
#include <string>

namespace adim {

/// Malformed input text (edge lists, witness files). Carries the 1-based
/// line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

/// A computation exceeded its wall-clock budget.
class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adim
