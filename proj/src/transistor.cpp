#include "wqed/transistor.hpp"

#include <cmath>
#include <stdexcept>

#include "wqed/errors.hpp"
#include "wqed/parallel.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Gaussian tails beyond 8 sigma carry less than 1e-14 of the norm.
constexpr double kIntegrationHalfWidth = 8.0;

}  // namespace

void GaussianPulse::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("GaussianPulse: sigma must be > 0");
    if (!std::isfinite(omega_center)) {
        throw std::invalid_argument("GaussianPulse: omega_center must be finite");
    }
}

double GaussianPulse::intensity(double k) const {
    const double z = (k - omega_center) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
}

SwitchResult switching_probability(const DrivenVParams& v, const GaussianPulse& pulse) {
    v.validate();
    pulse.validate();
    if (v.Delta != 0.0) {
        throw std::invalid_argument(
            "switching_probability: requires Delta = 0 (the 1/2 branching ratio of the "
            "loss channel holds only for equal dressed decay rates)");
    }
    const DressedBasis d = dress(v);
    const double gamma_sum = d.Gamma_plus + d.Gamma_minus;
    const double resonance = v.E2 - d.E_plus;

    const auto tE_at = [&](double k) {
        const double detuning = k - resonance;
        const complexd num(detuning, 0.5 * (v.gamma - gamma_sum));
        const complexd den(detuning, 0.5 * (v.gamma + gamma_sum));
        return num / den;
    };

    const double a = pulse.omega_center - kIntegrationHalfWidth * pulse.sigma;
    const double b = pulse.omega_center + kIntegrationHalfWidth * pulse.sigma;

    const auto coherent_integrand = [&](double k) {
        return pulse.intensity(k) * 0.25 * std::norm(tE_at(k) - 1.0);
    };
    const auto loss_integrand = [&](double k) {
        return pulse.intensity(k) * 0.25 * (1.0 - std::norm(tE_at(k)));
    };

    const auto clamp_rounding = [](double p) {
        return (p < 0.0 && p > -1e-12) ? 0.0 : p;
    };
    SwitchResult result;
    result.p_coherent = clamp_rounding(integrate_adaptive(coherent_integrand, a, b).value);
    result.p_loss_assisted = clamp_rounding(integrate_adaptive(loss_integrand, a, b).value);
    result.p_switch = result.p_coherent + result.p_loss_assisted;
    return result;
}

SwitchMap switch_map(const DrivenVParams& v_base,
                     const std::vector<double>& gammas,
                     const std::vector<double>& sigmas,
                     int threads) {
    if (gammas.empty() || sigmas.empty()) {
        throw std::invalid_argument("switch_map: grids must be nonempty");
    }
    SwitchMap map;
    map.gammas = gammas;
    map.sigmas = sigmas;
    map.values.resize(gammas.size() * sigmas.size());

    const DressedBasis d = dress(v_base);
    const double resonance = v_base.E2 - d.E_plus;

    parallel_for(map.values.size(), threads, [&](std::size_t idx) {
        const std::size_t i = idx / sigmas.size();
        const std::size_t j = idx % sigmas.size();
        DrivenVParams v = v_base;
        v.gamma = gammas[i];
        try {
            map.values[idx] = switching_probability(v, GaussianPulse{resonance, sigmas[j]});
        } catch (const std::exception& e) {
            throw NumericalError("switch_map: cell (gamma=" + std::to_string(gammas[i]) +
                                 ", sigma=" + std::to_string(sigmas[j]) + "): " + e.what());
        }
    });
    return map;
}

}  // namespace wqed
