#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qweyl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from fields of different order were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

/// A parameter lies outside the domain a construction requires.
struct DomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// A central element failed to act as a scalar (non-simple input, or
/// the ground field is too small for the requested branch).
struct NotSchurScalar : Error {
    using Error::Error;
};

/// Classification needs an eigenvalue that no supplied hint provides.
struct HintNeeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at) : Error(msg), pos(at) {}
};

}  // namespace qweyl
