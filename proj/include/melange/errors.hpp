#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace melange {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the byte offset of the offending spot.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Violated precondition: signature mismatch, index outside its slot
/// domain, incompatible law, value not representable, and the like.
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A broken internal invariant (e.g. a singular basis system, which a
/// correct build can never produce).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace melange
