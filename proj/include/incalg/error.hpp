// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_ERROR_HPP
#define INCALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace incalg {

/// Domain error: the input is well formed but the requested mathematical
/// object does not exist or a precondition is violated.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text: a generator spec, JSON document or number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when a cross-check between two independent computations disagrees.
/// Seeing one means a bug in this library, not in the caller's input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace incalg

#endif
