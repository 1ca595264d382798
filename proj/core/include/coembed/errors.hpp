#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coembed {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation requested on an algebra kind it does not support
// (e.g. partial derivatives in a free algebra).
class UnsupportedKind : public Error {
public:
    using Error::Error;
};

// Operands that do not fit together: series of different truncation
// orders, polynomials over different algebras, arity mismatches.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// A presentation, hom, star product, ... that fails validation.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Rewriting exceeded its iteration budget.
class RewriteBudgetExceeded : public Error {
public:
    using Error::Error;
};

// A derivation handed to pushforward that does not preserve ker(pi).
class NotInDerPi : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
        : Error(what + " at offset " + std::to_string(offset) + " (line " + std::to_string(line) +
                ", column " + std::to_string(column) + ")"),
          offset_(offset), line_(line), column_(column)
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace coembed
