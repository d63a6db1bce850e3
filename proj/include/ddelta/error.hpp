#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddelta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `offset()` is the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Exponent arithmetic would leave the range of a machine word.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Operands live in different polynomial rings.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Invalid argument to a mathematical operation (zero divisor, level 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A Groebner computation exceeded the configured resource budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A Cech class was handed to the annihilator section but is not annihilated.
class NotInAnnihilator : public Error {
public:
    using Error::Error;
};

}  // namespace ddelta
