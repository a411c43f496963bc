#pragma once

#include <stdexcept>
#include <string>

namespace layered {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (e.g. Jacobi alpha <= -1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Vector arguments whose lengths do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A medium, train or file violates its structural constraints.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured point or path cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Inverse problem failure. `stage()` names the pipeline step that failed.
class InversionError : public Error {
public:
    InversionError(std::string stage, const std::string& message);

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// An arrival time is explained by more than one lattice point.
class AmbiguityError : public InversionError {
public:
    using InversionError::InversionError;
};

}  // namespace layered
