#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wqed/disorder.hpp"
#include "wqed/schemes.hpp"

namespace wqed::cli {

/// Fully resolved run description. `resolved` is the schema-validated
/// config with all defaults filled in; feeding it back as a config
/// reproduces the run byte for byte.
struct RunConfig {
    std::string task;
    EmitterScheme scheme;
    int threads = 1;

    std::vector<double> omega_grid;  // spectrum, bands, dos, localization

    double d_lambda0 = 0.5;  // lattice cell length, units of lambda0
    double x0 = 0.5;         // dos impurity position, units of d
    std::optional<double> forced_sigma;
    bool force_broadened = false;

    std::vector<double> gamma_grid;  // switch-map
    std::vector<double> sigma_grid;

    DisorderSpec disorder;       // localization, xi-vs-drive
    double drive_omega = 0.0;    // xi-vs-drive photon frequency
    std::vector<double> Omega_grid;

    std::string csv_name;

    nlohmann::json resolved;
};

/// Validate the document against the task schema and build the run
/// description. Unknown sections or keys are rejected. Optional
/// overrides replace the config's seed / thread count before resolution.
RunConfig parse_config(const nlohmann::json& doc,
                       std::optional<std::uint64_t> seed_override = std::nullopt,
                       std::optional<int> threads_override = std::nullopt);

}  // namespace wqed::cli
