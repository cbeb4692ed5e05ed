#include "wqed/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wqed/errors.hpp"

namespace wqed {

namespace {

constexpr double kPerfectReflectorThreshold = 1e-12;
constexpr double kBlochModulusRelTol = 1e-9;
constexpr double kPi = 3.141592653589793238462643383279;

struct EigenPair {
    complexd l1;  // larger modulus
    complexd l2;
};

/// Eigenvalues of a 2x2 via the stable quadratic formula: the dominant
/// root from trace/2 +- sqrt(disc), the other from the determinant.
EigenPair eigenvalues_2x2(const TransferMatrix& T) {
    const complexd half_tau = 0.5 * (T(0, 0) + T(1, 1));
    const complexd det = T(0, 0) * T(1, 1) - T(0, 1) * T(1, 0);
    const complexd sq = std::sqrt(half_tau * half_tau - det);
    const complexd cand1 = half_tau + sq;
    const complexd cand2 = half_tau - sq;
    complexd l1 = (std::abs(cand1) >= std::abs(cand2)) ? cand1 : cand2;
    complexd l2 = (std::abs(l1) > 0.0) ? det / l1 : cand2;
    return {l1, l2};
}

void check_grid(const std::vector<double>& grid, const char* who) {
    if (grid.empty()) throw std::invalid_argument(std::string(who) + ": grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string(who) + ": grid must be strictly increasing");
        }
    }
}

/// Unit-normalized Lorentzian (sigma/pi)/(u^2 + sigma^2), integrated
/// against the linear interpolant of g over [a, b], evaluated at omega.
double lorentzian_segment(double a, double b, double g_a, double g_b, double sigma,
                          double omega) {
    const double slope = (g_b - g_a) / (b - a);
    const double A = g_a + slope * (omega - a);  // value of g at u = 0
    const double ua = a - omega;
    const double ub = b - omega;
    const double atan_term = (A / kPi) * (std::atan(ub / sigma) - std::atan(ua / sigma));
    const double log_term = (slope * sigma / (2.0 * kPi)) *
                            (std::log(ub * ub + sigma * sigma) - std::log(ua * ua + sigma * sigma));
    return atan_term + log_term;
}

}  // namespace

TransferMatrix cell_transfer(const ScatteringAmplitudes& amps, double omega, double d) {
    if (!(d > 0.0)) throw std::invalid_argument("cell_transfer: d must be > 0");
    if (std::abs(amps.t) <= kPerfectReflectorThreshold) {
        throw PerfectReflector("cell_transfer: |t| <= 1e-12, transfer matrix singular");
    }
    const complexd t = amps.t;
    const complexd r = amps.r;
    const complexd tc = std::conj(t);
    const complexd rc = std::conj(r);
    const complexd phase = std::polar(1.0, omega * d);
    TransferMatrix m;
    m(0, 0) = phase * (1.0 / tc);
    m(0, 1) = phase * (-rc / tc);
    m(1, 0) = std::conj(phase) * (-r / t);
    m(1, 1) = std::conj(phase) * (1.0 / t);
    return m;
}

BandPoint classify(const TransferMatrix& T, double d, double omega) {
    if (!T.allFinite()) throw std::invalid_argument("classify: matrix must be finite");
    const EigenPair eig = eigenvalues_2x2(T);
    const double m1 = std::abs(eig.l1);
    const double m2 = std::abs(eig.l2);
    const double common = std::sqrt(m1 * m2);  // e^{sigma d}

    BandPoint bp;
    bp.omega = omega;
    bp.absorption_sigma = std::log(m1 * m2) / (2.0 * d);
    if (bp.absorption_sigma < 0.0 && bp.absorption_sigma > -1e-12) bp.absorption_sigma = 0.0;

    const double rel_split = (m1 - m2) / m1;  // m1 >= m2 by construction
    if (rel_split <= kBlochModulusRelTol) {
        bp.kind = BandKind::bloch;
        bp.kappa = std::abs(std::arg(eig.l1)) / d;
        bp.attenuation = 0.0;
    } else {
        bp.kind = BandKind::gap;
        bp.kappa = (std::abs(std::arg(eig.l1)) > 0.5 * kPi) ? kPi / d : 0.0;
        bp.attenuation = std::log(m1 / common) / d;
    }
    return bp;
}

std::vector<BandPoint> band_scan(const EmitterScheme& scheme, double d,
                                 const std::vector<double>& omega_grid) {
    check_grid(omega_grid, "band_scan");
    std::vector<BandPoint> out;
    out.reserve(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const double omega = omega_grid[i];
        try {
            out.push_back(classify(cell_transfer(scheme_amplitudes(scheme, omega), omega, d),
                                   d, omega));
        } catch (const PerfectReflector&) {
            BandPoint bp;
            bp.omega = omega;
            bp.kind = BandKind::gap;
            bp.kappa = kPi / d;  // a perfect reflector pins the phase at the zone edge
            bp.attenuation = std::numeric_limits<double>::infinity();
            bp.absorption_sigma = 0.0;
            out.push_back(bp);
        } catch (const NumericalError& e) {
            throw NumericalError("band_scan: grid[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

complexd bloch_coupling(const TransferMatrix& T, double kappa, double d, double omega,
                        double x0) {
    const EigenPair eig = eigenvalues_2x2(T);
    const double common = std::sqrt(std::abs(eig.l1) * std::abs(eig.l2));
    const complexd target = common * std::polar(1.0, kappa * d);
    const double tol = 1e-8 * std::max(1.0, common);
    complexd lambda;
    if (std::abs(eig.l1 - target) <= std::abs(eig.l2 - target)) {
        lambda = eig.l1;
        if (std::abs(lambda - target) > tol) {
            throw NumericalError("bloch_coupling: e^{i kappa d} is not an eigenvalue of T");
        }
    } else {
        lambda = eig.l2;
        if (std::abs(lambda - target) > tol) {
            throw NumericalError("bloch_coupling: e^{i kappa d} is not an eigenvalue of T");
        }
    }

    // Null vector of (T - lambda); take the better-conditioned row.
    Eigen::Vector2cd v1(T(0, 1), lambda - T(0, 0));
    Eigen::Vector2cd v2(lambda - T(1, 1), T(1, 0));
    Eigen::Vector2cd v = (v1.norm() >= v2.norm()) ? v1 : v2;
    if (v.norm() < 1e-300) v = Eigen::Vector2cd(1.0, 0.0);  // T proportional to identity
    v.normalize();
    // Fix the global phase: a_R real >= 0 (fall back to a_L for pure left-movers).
    const complexd anchor = (std::abs(v(0)) > 1e-14) ? v(0) : v(1);
    v *= std::conj(anchor) / std::abs(anchor);

    const complexd e_plus = std::polar(1.0, omega * x0);
    return v(0) * e_plus + v(1) * std::conj(e_plus);
}

DosCurve density_of_states(const EmitterScheme& scheme, double d, double x0,
                           const std::vector<double>& omega_grid, const DosOptions& options) {
    check_grid(omega_grid, "density_of_states");
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw std::invalid_argument("density_of_states: x0 must lie in [0, 1] (units of d)");
    }
    const std::size_t n = omega_grid.size();
    const bool broadened =
        options.force_broadened || options.forced_sigma.has_value() || !is_lossless(scheme);

    // Scan: classification, coupling weight and broadening per grid point.
    std::vector<BandPoint> points(n);
    std::vector<double> chi2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double omega = omega_grid[i];
        try {
            const TransferMatrix T = cell_transfer(scheme_amplitudes(scheme, omega), omega, d);
            points[i] = classify(T, d, omega);
            if (points[i].kind == BandKind::bloch) {
                chi2[i] = std::norm(bloch_coupling(T, points[i].kappa, d, omega, x0 * d));
            }
        } catch (const PerfectReflector&) {
            points[i].omega = omega;
            points[i].kind = BandKind::gap;
            points[i].kappa = 0.0;
            points[i].attenuation = std::numeric_limits<double>::infinity();
            points[i].absorption_sigma = 0.0;
        }
    }

    // |dkappa/domega| by centered differences inside each Bloch run,
    // one-sided at the run edges.
    std::vector<double> weight(n, 0.0);  // |chi|^2 * |dkappa/domega|
    auto is_bloch = [&](std::size_t i) { return points[i].kind == BandKind::bloch; };
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_bloch(i)) continue;
        const bool left = i > 0 && is_bloch(i - 1);
        const bool right = i + 1 < n && is_bloch(i + 1);
        double dkdo = 0.0;
        if (left && right) {
            dkdo = (points[i + 1].kappa - points[i - 1].kappa) /
                   (omega_grid[i + 1] - omega_grid[i - 1]);
        } else if (right) {
            dkdo = (points[i + 1].kappa - points[i].kappa) / (omega_grid[i + 1] - omega_grid[i]);
        } else if (left) {
            dkdo = (points[i].kappa - points[i - 1].kappa) / (omega_grid[i] - omega_grid[i - 1]);
        }  // isolated single-point band: no measure, weight stays 0
        weight[i] = chi2[i] * std::abs(dkdo);
    }

    DosCurve curve;
    curve.omega_grid = omega_grid;
    curve.x0 = x0;
    curve.density.assign(n, 0.0);

    if (!broadened) {
        curve.density = weight;
        return curve;
    }

    // Broadened branch: integrate weight(omega) against a unit-norm
    // Lorentzian of width sigma(omega) over every in-band interval.
    std::vector<double> sigma(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i] = options.forced_sigma.value_or(points[i].absorption_sigma);
    }
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!is_bloch(i) || !is_bloch(i + 1)) continue;
            const double s = 0.5 * (sigma[i] + sigma[i + 1]);
            if (!(s > 0.0)) {
                throw NumericalError(
                    "density_of_states: broadened branch requires a positive sigma "
                    "(lossy scheme or forced_sigma)");
            }
            acc += lorentzian_segment(omega_grid[i], omega_grid[i + 1], weight[i],
                                      weight[i + 1], s, omega_grid[j]);
        }
        curve.density[j] = acc;
    }
    return curve;
}

}  // namespace wqed
