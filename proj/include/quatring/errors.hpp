#pragma once

#include <stdexcept>
#include <string>

namespace quatring {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input. `position` is the 1-based offset (or token index,
// for set payloads) of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Checked 64-bit arithmetic overflowed. Results are never silently wrapped.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// An operation precondition does not hold (wrong ring, mixed classes, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A configured search bound (e.g. the coset cap) was exceeded.
class CapError : public Error {
public:
    explicit CapError(const std::string& msg) : Error(msg) {}
};

}  // namespace quatring
