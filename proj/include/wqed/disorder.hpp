#pragma once

#include <cstdint>
#include <vector>

#include "wqed/schemes.hpp"

namespace wqed {

/// Ensemble description for the disordered array: n_emitters cells with
/// spacings drawn uniformly from [d_min, d_max] (units of the resonance
/// wavelength lambda0), n_realizations per frequency, fixed seed.
struct DisorderSpec {
    int n_emitters = 100;
    int n_realizations = 100;
    double d_min = 0.4;
    double d_max = 0.6;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Inverse localization length statistics at one frequency. Divergent
/// realizations (a perfectly reflecting cell) are excluded from the mean
/// and reported in n_divergent; if every realization diverges the mean
/// itself is +inf.
struct LocalizationEstimate {
    double omega;
    double inv_xi_mean;
    double inv_xi_stderr;
    int n_divergent;
};

/// Spacings (absolute length units) of one realization, drawn from the
/// stream keyed by (spec.seed, grid_index, realization_index).
std::vector<double> draw_spacings(const DisorderSpec& spec, double lambda0,
                                  std::size_t grid_index, std::size_t realization_index);

/// Inverse localization length of one realization:
///   xi^{-1} = ln(max |eig(T_N)|) / (N * mean spacing),
/// where T_N is the ordered product of the cell transfer matrices,
/// accumulated with running renormalization. Returns +inf when a cell is
/// a perfect reflector. The scheme must be lossless.
double realization_inv_xi(const EmitterScheme& scheme, const std::vector<double>& spacings,
                          double omega);

/// Independent estimator of the same exponent from the growth rate of
/// ln||T_N v|| under per-cell renormalization (power iteration).
double realization_inv_xi_norm_growth(const EmitterScheme& scheme,
                                      const std::vector<double>& spacings, double omega);

/// Ensemble-averaged xi^{-1} over the frequency grid. Per-realization
/// estimates normalize by N * dbar with dbar = (d_min + d_max)/2 *
/// lambda0. Deterministic for fixed seed regardless of thread count.
std::vector<LocalizationEstimate> localization_spectrum(const EmitterScheme& scheme,
                                                        const DisorderSpec& spec,
                                                        const std::vector<double>& omega_grid,
                                                        int threads = 1);

/// Sweep of the drive strength Omega at a fixed photon frequency; the
/// i-th estimate corresponds to Omega_grid[i] (streams keyed by the
/// Omega index). The omega field of each estimate is the photon
/// frequency.
std::vector<LocalizationEstimate> xi_vs_drive(const DrivenLambdaParams& base,
                                              const DisorderSpec& spec, double omega,
                                              const std::vector<double>& Omega_grid,
                                              int threads = 1);

}  // namespace wqed
