#pragma once

#include <stdexcept>
#include <string>

namespace logsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Forms or vectors of different ambient dimension were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Residue taken along a coordinate where the form has a pole of order >= 2.
class InvalidResidueError : public Error {
public:
    using Error::Error;
};

/// The coefficient matrix has vanishing Pfaffian.
class DegenerateStructureError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the domain of an operation (bad indices, j <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed user input. `where` locates the problem (JSON pointer or byte offset).
class InputError : public Error {
public:
    InputError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)), detail_(what) {}

    const std::string& where() const noexcept { return where_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string where_;
    std::string detail_;
};

}  // namespace logsym
