#pragma once

#include <complex>

#include "wqed/scattering.hpp"
#include "wqed/schemes.hpp"

namespace wqed {

/// Dressed eigenbasis |+>, |-> of the driven ground-state doublet of the
/// V scheme, with the waveguide decay split between the branches. The
/// sum rule Gamma_plus + Gamma_minus = Gamma holds by construction.
struct DressedBasis {
    double E_plus;
    double E_minus;
    double Gamma_plus;
    double Gamma_minus;
    double q;  // sideband shift, q = E_minus - E_plus
};

/// One row of the two-channel scattering matrix: amplitude for staying
/// in the initial internal state (elastic, photon keeps k) and for the
/// Raman transition (photon moves to the sideband k_raman).
struct RamanRow {
    complexd elastic;
    complexd raman;
    double k_elastic;  // equals the incoming wavenumber
    double k_raman;    // sideband wavenumber fixed by energy conservation
};

/// Full two-channel scattering matrix at one incoming wavenumber,
/// together with the sideband shift q.
struct RamanSMatrix {
    complexd a_elastic_from_lower;
    complexd a_raman_from_lower;
    complexd a_elastic_from_upper;
    complexd a_raman_from_upper;
    double q;
};

/// Which internal state the emitter occupies before scattering.
/// `lower` is level |1> (the Gamma1-coupled ground state), `upper` is
/// level |3>. For the driven V scheme in the dressed basis, |+> takes
/// the lower slot and |-> the upper one.
enum class InitialState { lower, upper };

/// Transmission phase factor of the interacting (bright) mode of the
/// Lambda scheme with two coupling transitions, at total energy E:
///   t_E = (E - E2 + i*gamma/2 - i*(Gamma1+Gamma3)/2)
///       / (E - E2 + i*gamma/2 + i*(Gamma1+Gamma3)/2)
complexd lambda_tE(const LambdaTwoTransitionParams& p, double E_total);

/// Scatter a photon of wavenumber k off the Lambda emitter prepared in
/// `initial`. From |1>: elastic (t_E*Gamma1 + Gamma3)/(Gamma1+Gamma3) on
/// |k,1> and Raman sqrt(Gamma1*Gamma3)*(t_E-1)/(Gamma1+Gamma3) on
/// |k-q,3> with q = E3 - E1; mirrored from |3>.
RamanRow lambda_scatter(const LambdaTwoTransitionParams& p, double k, InitialState initial);

/// Both rows of the channel matrix at the same incoming wavenumber.
RamanSMatrix lambda_smatrix(const LambdaTwoTransitionParams& p, double k);

/// Dressed basis of the driven V scheme:
///   Omega_eff = sqrt(Omega^2 + Delta^2), E_pm = -Delta/2 +- Omega_eff/2,
///   Gamma_pm  = Gamma * Omega^2 / (2 Omega_eff (Omega_eff -+ Delta)).
DressedBasis dress(const DrivenVParams& p);

/// Scatter a photon off the driven V emitter prepared in |+> (lower
/// slot) or |-> (upper slot). Equivalent to lambda_scatter on the
/// dressed parameters (E1 := E_plus, E3 := E_minus, Gamma1 := Gamma_plus,
/// Gamma3 := Gamma_minus); evaluated here in detuning form with
/// delta = k - (E2 - E_initial).
RamanRow driven_v_scatter(const DrivenVParams& p, double k, InitialState initial);

/// Both rows of the dressed channel matrix at one incoming wavenumber.
RamanSMatrix driven_v_smatrix(const DrivenVParams& p, double k);

}  // namespace wqed
