#pragma once

#include <stdexcept>
#include <string>

namespace graphbounds {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

class SizeExceeded : public Error {
public:
    using Error::Error;
};

class TooFewVertices : public Error {
public:
    using Error::Error;
};

class InvalidProbability : public Error {
public:
    using Error::Error;
};

class Infeasible : public Error {
public:
    using Error::Error;
};

class WiringFailure : public Error {
public:
    using Error::Error;
};

// Parse errors carry a 1-based line number when known (0 = unknown).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

class MalformedLine : public ParseError {
public:
    using ParseError::ParseError;
};

class NotSquare : public ParseError {
public:
    using ParseError::ParseError;
};

class OutOfRangeEntry : public ParseError {
public:
    using ParseError::ParseError;
};

class AsymmetryTooLarge : public ParseError {
public:
    using ParseError::ParseError;
};

class AsymmetricAdjacency : public ParseError {
public:
    using ParseError::ParseError;
};

class NonBinaryEntry : public ParseError {
public:
    using ParseError::ParseError;
};

class SelfLoopEntry : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace graphbounds
