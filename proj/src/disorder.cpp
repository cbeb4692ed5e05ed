#include "wqed/disorder.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Core>

#include "wqed/errors.hpp"
#include "wqed/lattice.hpp"
#include "wqed/parallel.hpp"
#include "wqed/rng.hpp"
#include "wqed/scattering.hpp"

namespace wqed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

/// ln(max |eig|) of the ordered product of the cell transfer matrices,
/// with running renormalization so near-resonant products cannot
/// overflow. Returns +inf when any cell is a perfect reflector.
double log_max_eigenvalue(const EmitterScheme& scheme, const std::vector<double>& spacings,
                          double omega) {
    const ScatteringAmplitudes amps = scheme_amplitudes(scheme, omega);
    Eigen::Matrix2cd product = Eigen::Matrix2cd::Identity();
    double log_scale = 0.0;
    for (double d : spacings) {
        try {
            product = (cell_transfer(amps, omega, d) * product).eval();
        } catch (const PerfectReflector&) {
            return kInf;
        }
        const double norm = product.cwiseAbs().maxCoeff();
        if (norm > 1e50) {
            product /= norm;
            log_scale += std::log(norm);
        }
    }
    const complexd half_tau = 0.5 * (product(0, 0) + product(1, 1));
    const complexd det = product(0, 0) * product(1, 1) - product(0, 1) * product(1, 0);
    const complexd sq = std::sqrt(half_tau * half_tau - det);
    const double max_mod = std::max(std::abs(half_tau + sq), std::abs(half_tau - sq));
    return log_scale + std::log(max_mod);
}

double clamp_rounding(double inv_xi) {
    // Lossless products have max |eig| >= 1; tiny negative values are
    // rounding residue.
    return (inv_xi < 0.0 && inv_xi > -1e-9) ? 0.0 : inv_xi;
}

void check_spacings(const std::vector<double>& spacings) {
    if (spacings.empty()) throw std::invalid_argument("spacings must be nonempty");
    for (double d : spacings) {
        if (!(d > 0.0)) throw std::invalid_argument("spacings must be > 0");
    }
}

void check_lossless_single_channel(const EmitterScheme& scheme) {
    if (!has_single_channel_amplitude(scheme)) {
        throw std::invalid_argument(
            "disorder: Raman schemes have no single-channel amplitude; use the two-level, "
            "driven-Lambda or two-transition-V configuration");
    }
    if (!is_lossless(scheme)) {
        throw std::invalid_argument("disorder: localization estimates require a lossless scheme");
    }
}

double mean(const std::vector<double>& xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

LocalizationEstimate aggregate(double omega, const std::vector<double>& values) {
    LocalizationEstimate est;
    est.omega = omega;
    est.n_divergent = 0;
    double sum = 0.0;
    int n = 0;
    for (double v : values) {
        if (std::isinf(v)) {
            ++est.n_divergent;
        } else {
            sum += v;
            ++n;
        }
    }
    if (n == 0) {
        est.inv_xi_mean = kInf;
        est.inv_xi_stderr = 0.0;
        return est;
    }
    est.inv_xi_mean = sum / n;
    double ss = 0.0;
    for (double v : values) {
        if (!std::isinf(v)) ss += (v - est.inv_xi_mean) * (v - est.inv_xi_mean);
    }
    est.inv_xi_stderr = (n > 1) ? std::sqrt(ss / (n - 1)) / std::sqrt(double(n)) : 0.0;
    return est;
}

}  // namespace

void DisorderSpec::validate() const {
    if (n_emitters <= 1) throw std::invalid_argument("DisorderSpec: n_emitters must be > 1");
    if (n_realizations <= 0) {
        throw std::invalid_argument("DisorderSpec: n_realizations must be > 0");
    }
    if (!(d_min > 0.0 && d_min <= d_max)) {
        throw std::invalid_argument("DisorderSpec: need 0 < d_min <= d_max");
    }
}

std::vector<double> draw_spacings(const DisorderSpec& spec, double lambda0,
                                  std::size_t grid_index, std::size_t realization_index) {
    spec.validate();
    StreamRng rng(spec.seed, grid_index, realization_index);
    std::vector<double> spacings(spec.n_emitters);
    for (double& d : spacings) d = rng.uniform(spec.d_min, spec.d_max) * lambda0;
    return spacings;
}

double realization_inv_xi(const EmitterScheme& scheme, const std::vector<double>& spacings,
                          double omega) {
    check_lossless_single_channel(scheme);
    check_spacings(spacings);
    const double log_max = log_max_eigenvalue(scheme, spacings, omega);
    if (std::isinf(log_max)) return kInf;
    return clamp_rounding(log_max / (static_cast<double>(spacings.size()) * mean(spacings)));
}

double realization_inv_xi_norm_growth(const EmitterScheme& scheme,
                                      const std::vector<double>& spacings, double omega) {
    check_lossless_single_channel(scheme);
    check_spacings(spacings);
    const ScatteringAmplitudes amps = scheme_amplitudes(scheme, omega);
    Eigen::Vector2cd v(1.0, 0.0);
    double log_growth = 0.0;
    for (double d : spacings) {
        try {
            v = (cell_transfer(amps, omega, d) * v).eval();
        } catch (const PerfectReflector&) {
            return kInf;
        }
        const double norm = v.norm();
        log_growth += std::log(norm);
        v /= norm;
    }
    return clamp_rounding(log_growth / (static_cast<double>(spacings.size()) * mean(spacings)));
}

std::vector<LocalizationEstimate> localization_spectrum(const EmitterScheme& scheme,
                                                        const DisorderSpec& spec,
                                                        const std::vector<double>& omega_grid,
                                                        int threads) {
    check_lossless_single_channel(scheme);
    spec.validate();
    if (omega_grid.empty()) {
        throw std::invalid_argument("localization_spectrum: grid must be nonempty");
    }
    const double lambda0 = kTwoPi / resonance_frequency(scheme);
    const double dbar = 0.5 * (spec.d_min + spec.d_max) * lambda0;
    const double cells = static_cast<double>(spec.n_emitters);

    std::vector<LocalizationEstimate> out(omega_grid.size());
    parallel_for(omega_grid.size(), threads, [&](std::size_t i) {
        const double omega = omega_grid[i];
        std::vector<double> values(spec.n_realizations);
        for (int r = 0; r < spec.n_realizations; ++r) {
            const std::vector<double> spacings =
                draw_spacings(spec, lambda0, i, static_cast<std::size_t>(r));
            const double log_max = log_max_eigenvalue(scheme, spacings, omega);
            values[r] = std::isinf(log_max) ? kInf : clamp_rounding(log_max / (cells * dbar));
        }
        out[i] = aggregate(omega, values);
    });
    return out;
}

std::vector<LocalizationEstimate> xi_vs_drive(const DrivenLambdaParams& base,
                                              const DisorderSpec& spec, double omega,
                                              const std::vector<double>& Omega_grid,
                                              int threads) {
    spec.validate();
    if (Omega_grid.empty()) {
        throw std::invalid_argument("xi_vs_drive: Omega grid must be nonempty");
    }
    const double lambda0 = kTwoPi / base.E2;
    const double dbar = 0.5 * (spec.d_min + spec.d_max) * lambda0;
    const double cells = static_cast<double>(spec.n_emitters);

    std::vector<LocalizationEstimate> out(Omega_grid.size());
    parallel_for(Omega_grid.size(), threads, [&](std::size_t m) {
        DrivenLambdaParams params = base;
        params.Omega = Omega_grid[m];
        const EmitterScheme scheme = params;
        check_lossless_single_channel(scheme);
        std::vector<double> values(spec.n_realizations);
        for (int r = 0; r < spec.n_realizations; ++r) {
            const std::vector<double> spacings =
                draw_spacings(spec, lambda0, m, static_cast<std::size_t>(r));
            const double log_max = log_max_eigenvalue(scheme, spacings, omega);
            values[r] = std::isinf(log_max) ? kInf : clamp_rounding(log_max / (cells * dbar));
        }
        out[m] = aggregate(omega, values);
    });
    return out;
}

}  // namespace wqed
