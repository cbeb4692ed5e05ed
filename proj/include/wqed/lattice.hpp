#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "wqed/scattering.hpp"
#include "wqed/schemes.hpp"

namespace wqed {

/// 2x2 complex matrix relating right/left-moving amplitudes across one
/// lattice cell (emitter + free propagation over the cell length d).
using TransferMatrix = Eigen::Matrix2cd;

enum class BandKind { bloch, gap };

/// Classification of one frequency: a propagating Bloch state with quasi
/// momentum kappa in [0, pi/d], or a gap with per-length attenuation.
/// absorption_sigma is the common per-length damping factored out of the
/// eigenvalue pair (zero for lossless cells).
struct BandPoint {
    double omega;
    BandKind kind;
    double kappa;            // Bloch only; for gaps keeps the eigenvalue phase 0 or pi/d
    double attenuation;      // gap only (> 0, may be +inf); 0 for Bloch points
    double absorption_sigma; // >= 0 for passive cells
};

/// Broadened or sharp density of states weighted by the local coupling
/// |chi|^2 of an impurity at relative position x0 (units of d).
struct DosCurve {
    std::vector<double> omega_grid;
    std::vector<double> density;
    double x0;
};

struct DosOptions {
    /// Use the Lorentzian-broadened branch even for lossless schemes.
    bool force_broadened = false;
    /// Fixed broadening (overrides the per-frequency absorption sigma).
    std::optional<double> forced_sigma;
};

/// Transfer matrix of one cell:
///   T = diag(e^{i w d}, e^{-i w d}) * [[1/conj(t), -conj(r)/conj(t)],
///                                      [-r/t,       1/t          ]].
/// Throws PerfectReflector when |t| <= 1e-12.
TransferMatrix cell_transfer(const ScatteringAmplitudes& amps, double omega, double d);

/// Classify T by its eigenvalue pair: equal moduli (after removing the
/// common damping factor) -> Bloch, otherwise -> gap. Degenerate real
/// pairs at band edges are classified Bloch with kappa in {0, pi/d}.
BandPoint classify(const TransferMatrix& T, double d, double omega = 0.0);

/// Per-frequency cell_transfer + classify over a strictly increasing
/// grid. Perfect-reflector frequencies become gaps with attenuation
/// +inf.
std::vector<BandPoint> band_scan(const EmitterScheme& scheme, double d,
                                 const std::vector<double>& omega_grid);

/// Coupling chi = a_R e^{i w x0} + a_L e^{-i w x0} of an impurity at
/// absolute position x0 to the Bloch eigenvector of T with eigenvalue
/// e^{sigma d} e^{i kappa d}. The eigenvector is normalized to
/// |a_R|^2 + |a_L|^2 = 1 with a_R real >= 0. Throws NumericalError when
/// no eigenvalue of T matches within 1e-8.
complexd bloch_coupling(const TransferMatrix& T, double kappa, double d, double omega,
                        double x0);

/// Density of states on the grid. Lossless schemes (and lossless forced
/// branches) use D = |chi|^2 |dkappa/domega| on Bloch points; otherwise
/// each Bloch state is smeared with a unit-normalized Lorentzian of
/// width sigma(omega). x0 is in units of d. Curves are unnormalized.
DosCurve density_of_states(const EmitterScheme& scheme, double d, double x0,
                           const std::vector<double>& omega_grid,
                           const DosOptions& options = {});

}  // namespace wqed
