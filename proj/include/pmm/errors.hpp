#pragma once

#include <stdexcept>
#include <string>

namespace pmm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// operands from two different fields
class FieldMismatch : public Error {
public:
    using Error::Error;
};

// a precondition on the input does not hold
class DomainError : public Error {
public:
    using Error::Error;
};

// configured search / factorization limits exceeded
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// a self-check failed; indicates a bug rather than bad input
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& production, std::size_t pos, const std::string& msg)
        : Error("parse error in " + production + " at position " + std::to_string(pos) + ": " + msg),
          production_(production), pos_(pos) {}
    const std::string& production() const { return production_; }
    std::size_t position() const { return pos_; }

private:
    std::string production_;
    std::size_t pos_;
};

}  // namespace pmm
