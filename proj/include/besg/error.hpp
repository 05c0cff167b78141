#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace besg
{

// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class parse_error : public error
{
    std::size_t _line;
    std::size_t _column;

public:
    parse_error( const std::string& message, std::size_t line = 0, std::size_t column = 0 );

    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }
};

// A syntactically valid object that violates a structural invariant,
// e.g. two equations for the same variable.
class well_formedness_error : public error
{
public:
    using error::error;
};

// An operation was called on an input outside its domain.
class precondition_error : public error
{
public:
    using error::error;
};

} // namespace besg
