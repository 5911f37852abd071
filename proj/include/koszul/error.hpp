#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector is not in the span of a subspace (or not a cycle of a homology cell).
struct NotMember : Error {
    using Error::Error;
};

// Matrix shapes do not compose.
struct NonComposable : Error {
    using Error::Error;
};

// d_out * d_in != 0.
struct NotAComplex : Error {
    using Error::Error;
};

// Mixed fields, division by zero, bad characteristic.
struct FieldError : Error {
    using Error::Error;
};

// Requested weight lies outside the computed window.
struct BoundsError : Error {
    using Error::Error;
};

// A dimension or tensor cap would be exceeded.
struct ResourceCapError : Error {
    using Error::Error;
};

// Bad user configuration (catalog name, flags, parameters).
struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace koszul
