#pragma once

#include <stdexcept>
#include <string>

namespace fracmatch {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Bad query parameters (subset too large, d out of range, ...).
class InvalidQuery : public Error
{
public:
    using Error::Error;
};

// Malformed input: duplicate edges, probabilities not summing to one,
// unparsable rationals.
class ValidationError : public Error
{
public:
    using Error::Error;
};

// A configurable resource cap was exceeded.
class ResourceLimit : public Error
{
public:
    ResourceLimit( const std::string& what, std::string required )
        : Error( what + " (required: " + required + ")" )
        , required_( std::move( required ) )
    {}

    const std::string& required() const { return required_; }

private:
    std::string required_;
};

// The exact LP solver reached a state that is impossible on valid input.
class SolverError : public Error
{
public:
    using Error::Error;
};

// A computed value contradicts a proved bound. Always an implementation bug.
class BugDetected : public Error
{
public:
    using Error::Error;
};

} // namespace fracmatch
