#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wqed/disorder.hpp"
#include "wqed/errors.hpp"
#include "wqed/lattice.hpp"
#include "wqed/raman.hpp"
#include "wqed/scattering.hpp"
#include "wqed/transistor.hpp"

namespace py = pybind11;
using namespace wqed;

PYBIND11_MODULE(wqed, m) {
    m.doc() = "Single-photon scattering amplitudes, transistor switching, photonic "
              "bands and Anderson localization for emitters coupled to a 1D waveguide. "
              "Units: hbar = c = 1.";

    // Translators run newest-first: register the base class before the
    // derived one so PerfectReflector is not swallowed by NumericalError.
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<PerfectReflector>(m, "PerfectReflectorError", PyExc_RuntimeError);

    // Level configurations -------------------------------------------------
    py::class_<TwoLevelParams>(m, "TwoLevelParams")
        .def(py::init<double, double, double>(), py::arg("omega0"), py::arg("gamma") = 0.0,
             py::arg("Gamma") = 0.0)
        .def_readwrite("omega0", &TwoLevelParams::omega0)
        .def_readwrite("gamma", &TwoLevelParams::gamma)
        .def_readwrite("Gamma", &TwoLevelParams::Gamma);

    py::class_<DrivenLambdaParams>(m, "DrivenLambdaParams")
        .def(py::init<double, double, double, double, double, double>(), py::arg("E2"),
             py::arg("Delta") = 0.0, py::arg("Omega") = 0.0, py::arg("gamma2") = 0.0,
             py::arg("gamma3") = 0.0, py::arg("Gamma") = 0.0)
        .def_readwrite("E2", &DrivenLambdaParams::E2)
        .def_readwrite("Delta", &DrivenLambdaParams::Delta)
        .def_readwrite("Omega", &DrivenLambdaParams::Omega)
        .def_readwrite("gamma2", &DrivenLambdaParams::gamma2)
        .def_readwrite("gamma3", &DrivenLambdaParams::gamma3)
        .def_readwrite("Gamma", &DrivenLambdaParams::Gamma);

    py::class_<LambdaTwoTransitionParams>(m, "LambdaTwoTransitionParams")
        .def(py::init<double, double, double, double, double, double>(), py::arg("E1") = 0.0,
             py::arg("E3") = 0.0, py::arg("E2") = 0.0, py::arg("gamma") = 0.0,
             py::arg("Gamma1") = 0.0, py::arg("Gamma3") = 0.0)
        .def_readwrite("E1", &LambdaTwoTransitionParams::E1)
        .def_readwrite("E3", &LambdaTwoTransitionParams::E3)
        .def_readwrite("E2", &LambdaTwoTransitionParams::E2)
        .def_readwrite("gamma", &LambdaTwoTransitionParams::gamma)
        .def_readwrite("Gamma1", &LambdaTwoTransitionParams::Gamma1)
        .def_readwrite("Gamma3", &LambdaTwoTransitionParams::Gamma3);

    py::class_<DrivenVParams>(m, "DrivenVParams")
        .def(py::init<double, double, double, double, double>(), py::arg("E2"),
             py::arg("Delta") = 0.0, py::arg("Omega") = 0.0, py::arg("gamma") = 0.0,
             py::arg("Gamma") = 0.0)
        .def_readwrite("E2", &DrivenVParams::E2)
        .def_readwrite("Delta", &DrivenVParams::Delta)
        .def_readwrite("Omega", &DrivenVParams::Omega)
        .def_readwrite("gamma", &DrivenVParams::gamma)
        .def_readwrite("Gamma", &DrivenVParams::Gamma);

    py::class_<VTwoTransitionParams>(m, "VTwoTransitionParams")
        .def(py::init<double, double, double, double, double, double>(), py::arg("E2"),
             py::arg("E3"), py::arg("gamma2") = 0.0, py::arg("gamma3") = 0.0,
             py::arg("Gamma2") = 0.0, py::arg("Gamma3") = 0.0)
        .def_readwrite("E2", &VTwoTransitionParams::E2)
        .def_readwrite("E3", &VTwoTransitionParams::E3)
        .def_readwrite("gamma2", &VTwoTransitionParams::gamma2)
        .def_readwrite("gamma3", &VTwoTransitionParams::gamma3)
        .def_readwrite("Gamma2", &VTwoTransitionParams::Gamma2)
        .def_readwrite("Gamma3", &VTwoTransitionParams::Gamma3);

    // Scattering amplitudes -------------------------------------------------
    py::class_<ScatteringAmplitudes>(m, "ScatteringAmplitudes")
        .def_readonly("t", &ScatteringAmplitudes::t)
        .def_readonly("r", &ScatteringAmplitudes::r)
        .def_readonly("loss", &ScatteringAmplitudes::loss);

    m.def("two_level_t", &two_level_t, py::arg("params"), py::arg("omega"),
          "Symmetric-mode phase factor of a two-level emitter.");
    m.def("split_even_mode", &split_even_mode, py::arg("t"),
          "Map the phase factor t to transmission/reflection: (t+1)/2, (t-1)/2.");
    m.def("driven_lambda_t", &driven_lambda_t, py::arg("params"), py::arg("omega"));
    m.def("v_two_transition_t", &v_two_transition_t, py::arg("params"), py::arg("omega"));
    m.def("single_channel_t", &single_channel_t, py::arg("scheme"), py::arg("omega"));
    m.def("scheme_amplitudes", &scheme_amplitudes, py::arg("scheme"), py::arg("omega"));
    m.def("spectrum", &spectrum, py::arg("scheme"), py::arg("omega_grid"),
          "Amplitudes over a strictly increasing frequency grid.");

    // Raman channels ----------------------------------------------------------
    py::enum_<InitialState>(m, "InitialState")
        .value("lower", InitialState::lower)
        .value("upper", InitialState::upper);

    py::class_<DressedBasis>(m, "DressedBasis")
        .def_readonly("E_plus", &DressedBasis::E_plus)
        .def_readonly("E_minus", &DressedBasis::E_minus)
        .def_readonly("Gamma_plus", &DressedBasis::Gamma_plus)
        .def_readonly("Gamma_minus", &DressedBasis::Gamma_minus)
        .def_readonly("q", &DressedBasis::q);

    py::class_<RamanRow>(m, "RamanRow")
        .def_readonly("elastic", &RamanRow::elastic)
        .def_readonly("raman", &RamanRow::raman)
        .def_readonly("k_elastic", &RamanRow::k_elastic)
        .def_readonly("k_raman", &RamanRow::k_raman);

    py::class_<RamanSMatrix>(m, "RamanSMatrix")
        .def_readonly("a_elastic_from_lower", &RamanSMatrix::a_elastic_from_lower)
        .def_readonly("a_raman_from_lower", &RamanSMatrix::a_raman_from_lower)
        .def_readonly("a_elastic_from_upper", &RamanSMatrix::a_elastic_from_upper)
        .def_readonly("a_raman_from_upper", &RamanSMatrix::a_raman_from_upper)
        .def_readonly("q", &RamanSMatrix::q);

    m.def("lambda_tE", &lambda_tE, py::arg("params"), py::arg("E_total"));
    m.def("lambda_scatter", &lambda_scatter, py::arg("params"), py::arg("k"),
          py::arg("initial"), "Two-channel scattering off the Lambda emitter.");
    m.def("lambda_smatrix", &lambda_smatrix, py::arg("params"), py::arg("k"));
    m.def("dress", &dress, py::arg("params"), "Dressed basis of the driven V scheme.");
    m.def("driven_v_scatter", &driven_v_scatter, py::arg("params"), py::arg("k"),
          py::arg("initial"));
    m.def("driven_v_smatrix", &driven_v_smatrix, py::arg("params"), py::arg("k"));

    // Transistor -----------------------------------------------------------
    py::class_<GaussianPulse>(m, "GaussianPulse")
        .def(py::init<double, double>(), py::arg("omega_center"), py::arg("sigma"))
        .def_readwrite("omega_center", &GaussianPulse::omega_center)
        .def_readwrite("sigma", &GaussianPulse::sigma)
        .def("intensity", &GaussianPulse::intensity, py::arg("k"));

    py::class_<SwitchResult>(m, "SwitchResult")
        .def_readonly("p_switch", &SwitchResult::p_switch)
        .def_readonly("p_coherent", &SwitchResult::p_coherent)
        .def_readonly("p_loss_assisted", &SwitchResult::p_loss_assisted);

    py::class_<SwitchMap>(m, "SwitchMap")
        .def_readonly("gammas", &SwitchMap::gammas)
        .def_readonly("sigmas", &SwitchMap::sigmas)
        .def_readonly("values", &SwitchMap::values);

    m.def("switching_probability", &switching_probability, py::arg("v"), py::arg("pulse"),
          "Probability that a gate photon switches the driven-V emitter to |->.");
    m.def("switch_map", &switch_map, py::arg("v_base"), py::arg("gammas"), py::arg("sigmas"),
          py::arg("threads") = 1);

    // Lattice ----------------------------------------------------------------
    py::enum_<BandKind>(m, "BandKind")
        .value("bloch", BandKind::bloch)
        .value("gap", BandKind::gap);

    py::class_<BandPoint>(m, "BandPoint")
        .def_readonly("omega", &BandPoint::omega)
        .def_readonly("kind", &BandPoint::kind)
        .def_readonly("kappa", &BandPoint::kappa)
        .def_readonly("attenuation", &BandPoint::attenuation)
        .def_readonly("absorption_sigma", &BandPoint::absorption_sigma);

    py::class_<DosCurve>(m, "DosCurve")
        .def_readonly("omega_grid", &DosCurve::omega_grid)
        .def_readonly("density", &DosCurve::density)
        .def_readonly("x0", &DosCurve::x0);

    m.def("cell_transfer", &cell_transfer, py::arg("amps"), py::arg("omega"), py::arg("d"),
          "2x2 transfer matrix of one emitter cell (as a numpy array).");
    m.def("classify", &classify, py::arg("T"), py::arg("d"), py::arg("omega") = 0.0);
    m.def("band_scan", &band_scan, py::arg("scheme"), py::arg("d"), py::arg("omega_grid"));
    m.def("bloch_coupling", &bloch_coupling, py::arg("T"), py::arg("kappa"), py::arg("d"),
          py::arg("omega"), py::arg("x0"));
    m.def(
        "density_of_states",
        [](const EmitterScheme& scheme, double d, double x0, const std::vector<double>& grid,
           std::optional<double> forced_sigma, bool force_broadened) {
            DosOptions options;
            options.forced_sigma = forced_sigma;
            options.force_broadened = force_broadened;
            return density_of_states(scheme, d, x0, grid, options);
        },
        py::arg("scheme"), py::arg("d"), py::arg("x0"), py::arg("omega_grid"),
        py::arg("forced_sigma") = std::nullopt, py::arg("force_broadened") = false,
        "Impurity-weighted density of states; broadened when the scheme is lossy.");

    // Disorder ---------------------------------------------------------------
    py::class_<DisorderSpec>(m, "DisorderSpec")
        .def(py::init([](int n_emitters, int n_realizations, double d_min, double d_max,
                         std::uint64_t seed) {
                 return DisorderSpec{n_emitters, n_realizations, d_min, d_max, seed};
             }),
             py::arg("n_emitters") = 100, py::arg("n_realizations") = 100,
             py::arg("d_min") = 0.4, py::arg("d_max") = 0.6, py::arg("seed") = 0)
        .def_readwrite("n_emitters", &DisorderSpec::n_emitters)
        .def_readwrite("n_realizations", &DisorderSpec::n_realizations)
        .def_readwrite("d_min", &DisorderSpec::d_min)
        .def_readwrite("d_max", &DisorderSpec::d_max)
        .def_readwrite("seed", &DisorderSpec::seed);

    py::class_<LocalizationEstimate>(m, "LocalizationEstimate")
        .def_readonly("omega", &LocalizationEstimate::omega)
        .def_readonly("inv_xi_mean", &LocalizationEstimate::inv_xi_mean)
        .def_readonly("inv_xi_stderr", &LocalizationEstimate::inv_xi_stderr)
        .def_readonly("n_divergent", &LocalizationEstimate::n_divergent);

    m.def("draw_spacings", &draw_spacings, py::arg("spec"), py::arg("lambda0"),
          py::arg("grid_index"), py::arg("realization_index"));
    m.def("realization_inv_xi", &realization_inv_xi, py::arg("scheme"), py::arg("spacings"),
          py::arg("omega"));
    m.def("realization_inv_xi_norm_growth", &realization_inv_xi_norm_growth, py::arg("scheme"),
          py::arg("spacings"), py::arg("omega"));
    m.def("localization_spectrum", &localization_spectrum, py::arg("scheme"), py::arg("spec"),
          py::arg("omega_grid"), py::arg("threads") = 1,
          "Ensemble-averaged inverse localization length over the grid.");
    m.def("xi_vs_drive", &xi_vs_drive, py::arg("base"), py::arg("spec"), py::arg("omega"),
          py::arg("Omega_grid"), py::arg("threads") = 1);

    m.def("resonance_frequency", &resonance_frequency, py::arg("scheme"));
    m.def("is_lossless", &is_lossless, py::arg("scheme"));

    m.attr("__version__") = "0.1.0";
}
