#pragma once

#include <stdexcept>
#include <string>

namespace cbsteiner {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad indices, malformed structures, preconditions the caller violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// The graph is not connected; every solver requires a connected input.
class DisconnectedGraph : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A request that cannot be satisfied for the given instance dimensions
// (e.g. a proper terminal subset of a single-vertex side).
class InfeasibleRequest : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class OracleScaleExceeded : public Error {
public:
    using Error::Error;
};

// Raised when an internal invariant fails. Never expected on valid inputs.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace cbsteiner
