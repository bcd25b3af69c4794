#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfbloch {

// Root of every error the library throws. Callers that only care about
// "something in hopfbloch failed" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonUnitPureImaginary : public Error {
public:
    using Error::Error;
};

class NotNormalizable : public Error {
public:
    using Error::Error;
};

class NormOutOfTolerance : public Error {
public:
    using Error::Error;
};

class NegativeRadicand : public Error {
public:
    using Error::Error;
};

class InvalidSphereSet : public Error {
public:
    using Error::Error;
};

class BadWiring : public Error {
public:
    using Error::Error;
};

/// Circuit text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownGate : public ParseError {
public:
    using ParseError::ParseError;
};

class BadAngle : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace hopfbloch
