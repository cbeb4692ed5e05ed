#include "wqed/raman.hpp"

#include <cmath>

namespace wqed {

namespace {

/// Channel amplitudes given the bright-mode phase factor tE and the two
/// decay rates, for a photon arriving with the emitter in the state that
/// decays at rate g_own (the other branch has rate g_other).
void channel_amplitudes(complexd tE, double g_own, double g_other,
                        complexd* elastic, complexd* raman) {
    const double g_sum = g_own + g_other;
    *elastic = (tE * g_own + g_other) / g_sum;
    *raman = std::sqrt(g_own * g_other) * (tE - 1.0) / g_sum;
}

complexd phase_factor(double detuning, double gamma, double gamma_sum) {
    const complexd num(detuning, 0.5 * (gamma - gamma_sum));
    const complexd den(detuning, 0.5 * (gamma + gamma_sum));
    return num / den;
}

}  // namespace

complexd lambda_tE(const LambdaTwoTransitionParams& p, double E_total) {
    p.validate();
    return phase_factor(E_total - p.E2, p.gamma, p.Gamma1 + p.Gamma3);
}

RamanRow lambda_scatter(const LambdaTwoTransitionParams& p, double k, InitialState initial) {
    p.validate();
    const double q = p.E3 - p.E1;
    RamanRow row;
    row.k_elastic = k;
    if (initial == InitialState::lower) {
        const complexd tE = lambda_tE(p, p.E1 + k);
        channel_amplitudes(tE, p.Gamma1, p.Gamma3, &row.elastic, &row.raman);
        row.k_raman = k - q;
    } else {
        const complexd tE = lambda_tE(p, p.E3 + k);
        channel_amplitudes(tE, p.Gamma3, p.Gamma1, &row.elastic, &row.raman);
        row.k_raman = k + q;
    }
    return row;
}

RamanSMatrix lambda_smatrix(const LambdaTwoTransitionParams& p, double k) {
    const RamanRow from_lower = lambda_scatter(p, k, InitialState::lower);
    const RamanRow from_upper = lambda_scatter(p, k, InitialState::upper);
    return RamanSMatrix{from_lower.elastic, from_lower.raman,
                        from_upper.elastic, from_upper.raman, p.E3 - p.E1};
}

DressedBasis dress(const DrivenVParams& p) {
    p.validate();
    const double omega_eff = std::hypot(p.Omega, p.Delta);
    DressedBasis d;
    d.E_plus = 0.5 * (-p.Delta + omega_eff);
    d.E_minus = 0.5 * (-p.Delta - omega_eff);
    // Gamma_pm = Gamma*Omega^2 / (2 Omega_eff (Omega_eff -+ Delta)); the
    // identity Omega^2 = (Omega_eff - Delta)(Omega_eff + Delta) turns this
    // into the cancellation-free form below and makes the sum rule
    // Gamma_plus + Gamma_minus = Gamma exact.
    d.Gamma_plus = p.Gamma * (omega_eff + p.Delta) / (2.0 * omega_eff);
    d.Gamma_minus = p.Gamma * (omega_eff - p.Delta) / (2.0 * omega_eff);
    d.q = d.E_minus - d.E_plus;
    return d;
}

RamanRow driven_v_scatter(const DrivenVParams& p, double k, InitialState initial) {
    const DressedBasis d = dress(p);
    const double gamma_sum = d.Gamma_plus + d.Gamma_minus;
    RamanRow row;
    row.k_elastic = k;
    if (initial == InitialState::lower) {  // emitter in |+>
        const double detuning = k - (p.E2 - d.E_plus);
        const complexd tE = phase_factor(detuning, p.gamma, gamma_sum);
        channel_amplitudes(tE, d.Gamma_plus, d.Gamma_minus, &row.elastic, &row.raman);
        row.k_raman = k - d.q;
    } else {  // emitter in |->
        const double detuning = k - (p.E2 - d.E_minus);
        const complexd tE = phase_factor(detuning, p.gamma, gamma_sum);
        channel_amplitudes(tE, d.Gamma_minus, d.Gamma_plus, &row.elastic, &row.raman);
        row.k_raman = k + d.q;
    }
    return row;
}

RamanSMatrix driven_v_smatrix(const DrivenVParams& p, double k) {
    const RamanRow from_plus = driven_v_scatter(p, k, InitialState::lower);
    const RamanRow from_minus = driven_v_scatter(p, k, InitialState::upper);
    return RamanSMatrix{from_plus.elastic, from_plus.raman,
                        from_minus.elastic, from_minus.raman, dress(p).q};
}

}  // namespace wqed
