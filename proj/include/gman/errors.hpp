#pragma once

#include <stdexcept>
#include <string>

namespace gman {

/// Base class for all kernel errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Duplicate coordinate name in a chart declaration.
struct DuplicateNameError : Error {
    std::string name;
    explicit DuplicateNameError(const std::string& n)
        : Error("duplicate coordinate name: " + n), name(n) {}
};

/// Two values from different charts were combined.
struct ContextMismatchError : Error {
    ContextMismatchError() : Error("values belong to different charts") {}
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

/// A coordinate name or index that does not exist in the chart.
struct UnknownCoordinateError : Error {
    explicit UnknownCoordinateError(const std::string& n)
        : Error("unknown coordinate: " + n) {}
};

/// Degree bookkeeping violated (inhomogeneous input, mismatched substitution, ...).
struct DegreeError : Error {
    explicit DegreeError(const std::string& what) : Error(what) {}
};

/// A required invertibility certificate is missing or could not be produced.
struct CertificateError : Error {
    explicit CertificateError(const std::string& what) : Error(what) {}
};

/// Reduction preconditions failed (function not reducible, conditions violated).
struct ReductionError : Error {
    explicit ReductionError(const std::string& what) : Error(what) {}
};

}  // namespace gman
