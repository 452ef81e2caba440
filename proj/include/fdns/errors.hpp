#pragma once

#include <stdexcept>
#include <string>

namespace fdns {

// Base of all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values or images that violate an operation's preconditions.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// A window or coordinate does not fit inside the matrix.
struct OutOfBounds : Error {
    explicit OutOfBounds(const std::string& msg) : Error(msg) {}
};

// File system / codec failures. CLI exit code 2.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Comparing hashes produced under different parameters. CLI exit code 3.
struct IncompatibleHash : Error {
    explicit IncompatibleHash(const std::string& msg) : Error(msg) {}
};

// Malformed text input (attack specs, record files). CLI exit code 4.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Invalid run configuration (empty corpus, class too small, ...). CLI exit code 5.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Parameter combination outside a fixed contract (hash length is pinned to 64).
struct UnsupportedParameter : Error {
    explicit UnsupportedParameter(const std::string& msg) : Error(msg) {}
};

} // namespace fdns
