#pragma once

#include <vector>

#include "wqed/raman.hpp"

namespace wqed {

/// Gaussian frequency-space pulse |f(k)|^2 = exp(-(k-w0)^2/(2 sigma^2)) /
/// sqrt(2 pi sigma^2), normalized to unit total probability.
struct GaussianPulse {
    double omega_center;
    double sigma;

    void validate() const;

    /// |f(k)|^2 at wavenumber k.
    double intensity(double k) const;
};

/// Switching probability split into its two mechanisms: the coherent
/// Raman transfer |+> -> |-> and the decay branch where the photon is
/// lost but the emitter still lands in |->.
struct SwitchResult {
    double p_switch;
    double p_coherent;
    double p_loss_assisted;
};

/// Probability that a gate photon with the given pulse switches the
/// driven-V emitter from |+> to |->:
///   p = int |f|^2 |tE-1|^2/4 dk + int |f|^2 (1-|tE|^2)/4 dk.
/// Requires Delta = 0 (equal dressed decay rates, branching ratio 1/2).
SwitchResult switching_probability(const DrivenVParams& v, const GaussianPulse& pulse);

/// p_switch on the Cartesian grid gammas x sigmas, with the pulse
/// centered on the |+> resonance k = E2 - E_plus. Row-major: result
/// index [i*sigmas.size() + j] holds (gammas[i], sigmas[j]).
struct SwitchMap {
    std::vector<double> gammas;
    std::vector<double> sigmas;
    std::vector<SwitchResult> values;
};

SwitchMap switch_map(const DrivenVParams& v_base,
                     const std::vector<double>& gammas,
                     const std::vector<double>& sigmas,
                     int threads = 1);

}  // namespace wqed
