// errors.hpp — Exception types shared by the jchm modules

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jchm {

// Invalid inputs use std::invalid_argument directly. The types below carry
// extra context so the CLI can map them onto distinct exit codes.

/// Root bracket contained no sign change of the particle/hole gap.
class NoCrossingError : public std::runtime_error {
public:
    NoCrossingError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Iterative eigensolver failed to converge.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::size_t iterations)
        : std::runtime_error(what), iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

/// Requested computation exceeds the configured memory ceiling.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, double dimension)
        : std::runtime_error(what), dimension_(dimension) {}

    double dimension() const noexcept { return dimension_; }

private:
    double dimension_;
};

/// Amplitude sequence would leave the safe floating-point range.
class OverflowGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jchm
