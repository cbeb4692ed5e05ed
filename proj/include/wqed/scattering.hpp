#pragma once

#include <complex>
#include <vector>

#include "wqed/schemes.hpp"

namespace wqed {

using complexd = std::complex<double>;

/// Transmission/reflection amplitudes of the left/right-moving modes for
/// one frequency, plus the probability lost out of the waveguide.
struct ScatteringAmplitudes {
    complexd t;   // transmission amplitude
    complexd r;   // reflection amplitude
    double loss;  // 1 - |t|^2 - |r|^2
};

/// Phase factor t(omega) picked up by the symmetric waveguide mode when
/// crossing a two-level emitter:
///   t = (w - omega0 + i(gamma - Gamma)/2) / (w - omega0 + i(gamma + Gamma)/2)
complexd two_level_t(const TwoLevelParams& p, double omega);

/// Map the symmetric-mode phase factor t to left/right-moving
/// transmission and reflection: t~ = (t+1)/2, r~ = (t-1)/2.
/// Rejects |t| > 1 + 1e-12 as nonphysical.
ScatteringAmplitudes split_even_mode(complexd t);

/// Symmetric-mode phase factor for the driven Lambda scheme.
complexd driven_lambda_t(const DrivenLambdaParams& p, double omega);

/// Symmetric-mode phase factor for the V scheme with two coupled
/// transitions. Equivalent to a resonance at the bright superposition of
/// |2>, |3> plus a dark resonance at the Gamma-weighted mean
/// (Gamma3*E2 + Gamma2*E3)/(Gamma2 + Gamma3), where the cell becomes
/// fully transparent when both losses vanish.
complexd v_two_transition_t(const VTwoTransitionParams& p, double omega);

/// Single-channel phase factor for any scheme that has one. Throws
/// std::invalid_argument for the Raman configurations.
complexd single_channel_t(const EmitterScheme& scheme, double omega);

/// single_channel_t followed by split_even_mode.
ScatteringAmplitudes scheme_amplitudes(const EmitterScheme& scheme, double omega);

/// Element-wise scheme_amplitudes over a strictly increasing grid.
/// Element errors are rethrown with the grid index attached.
std::vector<ScatteringAmplitudes> spectrum(const EmitterScheme& scheme,
                                           const std::vector<double>& omega_grid);

}  // namespace wqed
