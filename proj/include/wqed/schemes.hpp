#pragma once

#include <variant>

namespace wqed {

// Units: hbar = 1 and c = 1 throughout, so angular frequency, energy and
// wavenumber are numerically identical. All rates and energies below are
// plain doubles in these units; detunings may be negative.

/// Two-level emitter: transition energy omega0, transversal loss rate
/// gamma, waveguide decay rate Gamma.
struct TwoLevelParams {
    double omega0 = 0.0;
    double gamma = 0.0;
    double Gamma = 0.0;

    void validate() const;
};

/// Driven Lambda scheme (EIT configuration): the waveguide couples
/// |1> -> |2>, a classical field with Rabi frequency Omega and detuning
/// Delta couples |2> <-> |3>. The energy of level |1> is fixed at zero.
struct DrivenLambdaParams {
    double E2 = 0.0;
    double Delta = 0.0;
    double Omega = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double Gamma = 0.0;

    void validate() const;
};

/// Lambda scheme with both ground states |1>, |3> coupled to the
/// waveguide through the shared excited level |2> (Raman configuration).
struct LambdaTwoTransitionParams {
    double E1 = 0.0;
    double E3 = 0.0;
    double E2 = 0.0;
    double gamma = 0.0;
    double Gamma1 = 0.0;
    double Gamma3 = 0.0;

    void validate() const;
};

/// Driven V scheme: the waveguide couples |1> -> |2>, the classical
/// field couples |1> <-> |3> (stable). Handled in the dressed basis.
struct DrivenVParams {
    double E2 = 0.0;
    double Delta = 0.0;
    double Omega = 0.0;
    double gamma = 0.0;
    double Gamma = 0.0;

    void validate() const;
};

/// V scheme with both excited levels |2>, |3> coupled to the waveguide.
/// The energy of the ground level |1> is fixed at zero. Couplings enter
/// only through the decay rates Gamma2, Gamma3.
struct VTwoTransitionParams {
    double E2 = 0.0;
    double E3 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double Gamma2 = 0.0;
    double Gamma3 = 0.0;

    void validate() const;
};

/// Tagged union over the five level configurations.
using EmitterScheme = std::variant<TwoLevelParams,
                                   DrivenLambdaParams,
                                   LambdaTwoTransitionParams,
                                   DrivenVParams,
                                   VTwoTransitionParams>;

void validate(const EmitterScheme& scheme);

/// True for configurations with a single-channel transmission amplitude
/// t(omega): two-level, driven Lambda, V with two transitions. The Raman
/// configurations scatter into two channels and have no such amplitude.
bool has_single_channel_amplitude(const EmitterScheme& scheme);

/// True when every transversal loss rate vanishes.
bool is_lossless(const EmitterScheme& scheme);

/// Bare resonance frequency of the scheme (transition from the lowest
/// level), used to define the reference wavelength lambda0 = 2*pi/omega.
double resonance_frequency(const EmitterScheme& scheme);

}  // namespace wqed
