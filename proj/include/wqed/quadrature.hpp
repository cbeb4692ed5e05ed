#pragma once

#include <functional>

namespace wqed {

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// Subdivides until the summed error estimate drops below abs_tol or the
/// interval budget is exhausted; throws NumericalError in the latter
/// case when the estimate still exceeds fail_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = 1e-10,
                                    double fail_tol = 1e-9,
                                    int max_intervals = 4000);

}  // namespace wqed
