#pragma once

#include <stdexcept>
#include <string>

namespace qads {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept { return "error"; }
};

/// Invalid user-supplied parameters (bad D/M combination, malformed range, ...).
class ParameterError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parameter"; }
};

/// A computation would exceed the configured size budget.
class ResourceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "resource"; }
};

/// An operation was applied outside its mathematical domain
/// (e.g. sign query on a non-real scalar).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// Certified sign determination ran out of precision budget.
class PrecisionError : public ResourceError {
public:
    using ResourceError::ResourceError;
    const char* kind() const noexcept override { return "precision"; }
};

/// An internal consistency gate failed during construction.  This always
/// indicates a convention bug in the library, never bad user input.
class ConstructionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "construction"; }
};

/// A computed result contradicts a structural expectation that is surfaced
/// as data rather than hidden (e.g. a window module that fails positivity,
/// or an inconsistent coordinate-operator system).
class ClaimViolationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "claim-violation"; }
};

} // namespace qads
