#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

/// Numerical failure that is not a programming error: degenerate
/// denominators, non-convergent quadrature, eigenvalue mismatches.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a lattice cell transmits nothing (|t| below threshold),
/// so the transfer matrix 1/t is singular. Callers classify the
/// frequency as a gap of infinite attenuation.
class PerfectReflector : public NumericalError {
public:
    explicit PerfectReflector(const std::string& what) : NumericalError(what) {}
};

}  // namespace wqed
