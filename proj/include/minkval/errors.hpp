#pragma once

#include <stdexcept>
#include <string>

namespace minkval {

struct EmptyBody : std::runtime_error {
    explicit EmptyBody(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a point set is not full-dimensional; carries the affine rank so
// the caller can project to a subspace and retry.
struct DegenerateHull : std::runtime_error {
    int affine_rank;
    DegenerateHull(const std::string& what, int rank)
        : std::runtime_error(what), affine_rank(rank) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosable : std::runtime_error {
    explicit NotClosable(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDimension : std::runtime_error {
    explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

struct NoSplit : std::runtime_error {
    explicit NoSplit(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidGroupElement : std::runtime_error {
    explicit InvalidGroupElement(const std::string& what) : std::runtime_error(what) {}
};

struct RecoveryFailed : std::runtime_error {
    double residual;
    RecoveryFailed(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

struct IOError : std::runtime_error {
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace minkval
