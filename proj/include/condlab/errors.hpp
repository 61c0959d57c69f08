#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condlab {

// Numerically singular input (LU pivot underflow, zero circulant symbol, ...).
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// A scalar pivot of a compressed-inverse representation is too small relative
// to its defining vector; the caller should switch representations or resample.
class DegeneratePivotError : public std::runtime_error {
public:
    DegeneratePivotError(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// An iteration hit its sweep/step cap without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace condlab
