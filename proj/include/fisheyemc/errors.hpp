#pragma once

#include <stdexcept>
#include <string>

namespace fmc {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value outside a mathematical domain (angle beyond the lens, pixel outside
// the image circle, zero byte count, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed or schema-violating input (JSON, JSONL, command syntax).
struct ParseError : Error {
    using Error::Error;
};

// Filesystem / stream failures and unsupported file formats.
struct IoError : Error {
    using Error::Error;
};

// Caller passed arguments that violate a precondition.
struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace fmc
