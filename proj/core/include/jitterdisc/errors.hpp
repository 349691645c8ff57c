#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jitterdisc {

/// Invalid argument values: bad dimensions, out-of-range indices, empty masks,
/// coordinates outside the unit cube.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because its estimated cost exceeds a configured
/// limit (box-count guards, replication budgets, subset-enumeration blowup).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace jitterdisc
