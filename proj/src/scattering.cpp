#include "wqed/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wqed/errors.hpp"

namespace wqed {

namespace {

constexpr double kDegenerateDenominator = 1e-300;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_finite(double x, const char* msg) {
    if (!std::isfinite(x)) throw std::invalid_argument(msg);
}

complexd checked_ratio(complexd num, complexd den, const char* where) {
    if (std::abs(den) < kDegenerateDenominator) {
        throw NumericalError(std::string(where) + ": degenerate denominator");
    }
    return num / den;
}

}  // namespace

void TwoLevelParams::validate() const {
    require_finite(omega0, "two_level: omega0 must be finite");
    require(Gamma > 0.0, "two_level: Gamma must be > 0");
    require(gamma >= 0.0, "two_level: gamma must be >= 0");
}

void DrivenLambdaParams::validate() const {
    require_finite(E2, "driven_lambda: E2 must be finite");
    require_finite(Delta, "driven_lambda: Delta must be finite");
    require(Gamma > 0.0, "driven_lambda: Gamma must be > 0");
    require(Omega >= 0.0, "driven_lambda: Omega must be >= 0");
    require(gamma2 >= 0.0 && gamma3 >= 0.0, "driven_lambda: loss rates must be >= 0");
}

void LambdaTwoTransitionParams::validate() const {
    require_finite(E1, "lambda_raman: E1 must be finite");
    require_finite(E3, "lambda_raman: E3 must be finite");
    require_finite(E2, "lambda_raman: E2 must be finite");
    require(Gamma1 > 0.0 && Gamma3 > 0.0, "lambda_raman: Gamma1, Gamma3 must be > 0");
    require(gamma >= 0.0, "lambda_raman: gamma must be >= 0");
}

void DrivenVParams::validate() const {
    require_finite(E2, "driven_v: E2 must be finite");
    require_finite(Delta, "driven_v: Delta must be finite");
    require(Omega > 0.0, "driven_v: Omega must be > 0 (dressed basis is singular at 0)");
    require(Gamma > 0.0, "driven_v: Gamma must be > 0");
    require(gamma >= 0.0, "driven_v: gamma must be >= 0");
}

void VTwoTransitionParams::validate() const {
    require_finite(E2, "v_two_transition: E2 must be finite");
    require_finite(E3, "v_two_transition: E3 must be finite");
    require(Gamma2 >= 0.0 && Gamma3 >= 0.0, "v_two_transition: Gamma rates must be >= 0");
    require(Gamma2 + Gamma3 > 0.0, "v_two_transition: Gamma2 + Gamma3 must be > 0");
    require(gamma2 >= 0.0 && gamma3 >= 0.0, "v_two_transition: loss rates must be >= 0");
}

void validate(const EmitterScheme& scheme) {
    std::visit([](const auto& p) { p.validate(); }, scheme);
}

bool has_single_channel_amplitude(const EmitterScheme& scheme) {
    return !std::holds_alternative<LambdaTwoTransitionParams>(scheme) &&
           !std::holds_alternative<DrivenVParams>(scheme);
}

bool is_lossless(const EmitterScheme& scheme) {
    struct Visitor {
        bool operator()(const TwoLevelParams& p) const { return p.gamma == 0.0; }
        bool operator()(const DrivenLambdaParams& p) const {
            return p.gamma2 == 0.0 && p.gamma3 == 0.0;
        }
        bool operator()(const LambdaTwoTransitionParams& p) const { return p.gamma == 0.0; }
        bool operator()(const DrivenVParams& p) const { return p.gamma == 0.0; }
        bool operator()(const VTwoTransitionParams& p) const {
            return p.gamma2 == 0.0 && p.gamma3 == 0.0;
        }
    };
    return std::visit(Visitor{}, scheme);
}

double resonance_frequency(const EmitterScheme& scheme) {
    struct Visitor {
        double operator()(const TwoLevelParams& p) const { return p.omega0; }
        double operator()(const DrivenLambdaParams& p) const { return p.E2; }
        double operator()(const LambdaTwoTransitionParams& p) const { return p.E2 - p.E1; }
        double operator()(const DrivenVParams& p) const { return p.E2; }
        double operator()(const VTwoTransitionParams& p) const { return p.E2; }
    };
    return std::visit(Visitor{}, scheme);
}

complexd two_level_t(const TwoLevelParams& p, double omega) {
    p.validate();
    const double detuning = omega - p.omega0;
    const complexd num(detuning, 0.5 * (p.gamma - p.Gamma));
    const complexd den(detuning, 0.5 * (p.gamma + p.Gamma));
    return num / den;  // denominator cannot vanish for Gamma > 0
}

ScatteringAmplitudes split_even_mode(complexd t) {
    if (std::abs(t) > 1.0 + 1e-12) {
        throw std::invalid_argument("split_even_mode: |t| > 1 is nonphysical");
    }
    ScatteringAmplitudes a;
    a.t = 0.5 * (t + 1.0);
    a.r = 0.5 * (t - 1.0);
    a.loss = 1.0 - std::norm(a.t) - std::norm(a.r);
    return a;
}

complexd driven_lambda_t(const DrivenLambdaParams& p, double omega) {
    p.validate();
    // b3: detuning from the photon resonance E2 - Delta, grouped so the
    // EIT point evaluates to an exact zero when omega hits it.
    const complexd b3((omega - p.E2) + p.Delta, 0.5 * p.gamma3);
    const complexd b2(omega - p.E2, 0.5 * p.gamma2);
    const complexd coupling = 0.25 * p.Omega * p.Omega;
    const complexd half_gamma(0.0, 0.5 * p.Gamma);
    const complexd num = b3 * (b2 - half_gamma) - coupling;
    const complexd den = b3 * (b2 + half_gamma) - coupling;
    return checked_ratio(num, den, "driven_lambda_t");
}

complexd v_two_transition_t(const VTwoTransitionParams& p, double omega) {
    p.validate();
    const complexd b2(omega - p.E2, 0.5 * p.gamma2);
    const complexd b3(omega - p.E3, 0.5 * p.gamma3);
    const complexd hg2(0.0, 0.5 * p.Gamma2);
    const complexd hg3(0.0, 0.5 * p.Gamma3);
    // The waveguide-mediated cross coupling between the two excited
    // levels is i*sqrt(Gamma2*Gamma3)/2; its square contributes
    // +Gamma2*Gamma3/4 to both determinants.
    const double cross = 0.25 * p.Gamma2 * p.Gamma3;
    const complexd num = (b2 - hg2) * (b3 - hg3) + cross;
    const complexd den = (b2 + hg2) * (b3 + hg3) + cross;
    return checked_ratio(num, den, "v_two_transition_t");
}

complexd single_channel_t(const EmitterScheme& scheme, double omega) {
    struct Visitor {
        double omega;
        complexd operator()(const TwoLevelParams& p) const { return two_level_t(p, omega); }
        complexd operator()(const DrivenLambdaParams& p) const {
            return driven_lambda_t(p, omega);
        }
        complexd operator()(const VTwoTransitionParams& p) const {
            return v_two_transition_t(p, omega);
        }
        complexd operator()(const LambdaTwoTransitionParams&) const {
            throw std::invalid_argument(
                "single_channel_t: Lambda scheme with two coupling transitions scatters "
                "into two channels; use lambda_scatter");
        }
        complexd operator()(const DrivenVParams&) const {
            throw std::invalid_argument(
                "single_channel_t: driven V scheme scatters into two channels; "
                "use driven_v_scatter");
        }
    };
    return std::visit(Visitor{omega}, scheme);
}

ScatteringAmplitudes scheme_amplitudes(const EmitterScheme& scheme, double omega) {
    return split_even_mode(single_channel_t(scheme, omega));
}

std::vector<ScatteringAmplitudes> spectrum(const EmitterScheme& scheme,
                                           const std::vector<double>& omega_grid) {
    if (omega_grid.empty()) throw std::invalid_argument("spectrum: grid must be nonempty");
    for (std::size_t i = 1; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > omega_grid[i - 1])) {
            throw std::invalid_argument("spectrum: grid must be strictly increasing");
        }
    }
    std::vector<ScatteringAmplitudes> out;
    out.reserve(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        try {
            out.push_back(scheme_amplitudes(scheme, omega_grid[i]));
        } catch (const NumericalError& e) {
            throw NumericalError("spectrum: grid[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

}  // namespace wqed
