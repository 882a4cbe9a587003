#pragma once

#include <stdexcept>
#include <string>

namespace qlin {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape or size mismatch: adding a 2x3 to a 3x2, multiplying
// incompatible matrices, a vector that does not live in the
// expected ambient space.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Inverting (or otherwise requiring regularity of) a singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// A computation that is well posed but that we decline to carry out,
// typically because exact arithmetic cannot represent the answer:
// a characteristic polynomial that does not split over the rationals,
// a chain basis requested for an operator that is not nilpotent.
// Callers can often retry with a float fallback where one exists.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input.  Carries a position when one is known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace qlin
