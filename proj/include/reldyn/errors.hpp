/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reldyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NegativeRadicand : public Error {
public:
    NegativeRadicand() : Error("square root of a negative quantity") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class DimensionTooLow : public Error {
public:
    explicit DimensionTooLow(std::size_t d)
        : Error("dimension " + std::to_string(d) + " is below the required minimum of 3") {}
};

class DegeneratePair : public Error {
public:
    DegeneratePair() : Error("points coincide") {}
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input") {}
};

class SingularMap : public Error {
public:
    SingularMap() : Error("affine map is not invertible") {}
};

class SpeedNotSubluminal : public Error {
public:
    SpeedNotSubluminal() : Error("speed must be strictly less than 1") {}
};

class NonpositiveMass : public Error {
public:
    NonpositiveMass() : Error("mass must be strictly positive") {}
};

class NoMedianNeeded : public Error {
public:
    NoMedianNeeded() : Error("equal nonzero velocities admit no median observer") {}
};

class NotPoincare : public Error {
public:
    NotPoincare() : Error("map does not preserve the Minkowski distance") {}
};

class UnknownId : public Error {
public:
    explicit UnknownId(const std::string& id) : Error("unknown id '" + id + "'") {}
};

class UnknownObserver : public UnknownId {
public:
    explicit UnknownObserver(const std::string& id) : UnknownId(id) {}
};

class NonInertialBody : public Error {
public:
    explicit NonInertialBody(const std::string& id)
        : Error("body '" + id + "' is not inertial") {}
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class UnknownAxiomName : public Error {
public:
    explicit UnknownAxiomName(const std::string& name)
        : Error("unknown axiom or theorem name '" + name + "'") {}
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return "parse error: " + message;
        return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
               message;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace reldyn
