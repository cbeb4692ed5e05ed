#include "tasks.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <variant>

#include "toml.hpp"
#include "wqed/disorder.hpp"
#include "wqed/errors.hpp"
#include "wqed/lattice.hpp"
#include "wqed/scattering.hpp"
#include "wqed/transistor.hpp"

namespace wqed::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Full-precision, locale-independent number formatting; infinities
/// print as the documented literal `inf`.
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out) throw IoError("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() + "'");
}

std::string spectrum_csv(const RunConfig& config) {
    const auto amps = wqed::spectrum(config.scheme, config.omega_grid);
    std::string csv = "omega,re_t,im_t,re_r,im_r,transmission,reflection,loss\n";
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto& a = amps[i];
        csv += fmt(config.omega_grid[i]) + ',' + fmt(a.t.real()) + ',' + fmt(a.t.imag()) + ',' +
               fmt(a.r.real()) + ',' + fmt(a.r.imag()) + ',' + fmt(std::norm(a.t)) + ',' +
               fmt(std::norm(a.r)) + ',' + fmt(a.loss) + '\n';
    }
    return csv;
}

std::string switch_map_csv(const RunConfig& config) {
    const auto& v = std::get<DrivenVParams>(config.scheme);
    const SwitchMap map = switch_map(v, config.gamma_grid, config.sigma_grid, config.threads);
    std::string csv = "gamma,sigma,p_switch,p_coherent,p_loss\n";
    for (std::size_t i = 0; i < map.gammas.size(); ++i) {
        for (std::size_t j = 0; j < map.sigmas.size(); ++j) {
            const SwitchResult& r = map.values[i * map.sigmas.size() + j];
            csv += fmt(map.gammas[i]) + ',' + fmt(map.sigmas[j]) + ',' + fmt(r.p_switch) + ',' +
                   fmt(r.p_coherent) + ',' + fmt(r.p_loss_assisted) + '\n';
        }
    }
    return csv;
}

std::string bands_csv(const RunConfig& config) {
    const double lambda0 = kTwoPi / resonance_frequency(config.scheme);
    const double d = config.d_lambda0 * lambda0;
    const auto scan = band_scan(config.scheme, d, config.omega_grid);
    std::string csv = "omega,kind,kappa,attenuation,absorption\n";
    for (const BandPoint& bp : scan) {
        csv += fmt(bp.omega) + ',' + (bp.kind == BandKind::bloch ? "bloch" : "gap") + ',' +
               fmt(bp.kappa) + ',' + fmt(bp.attenuation) + ',' + fmt(bp.absorption_sigma) + '\n';
    }
    return csv;
}

std::string dos_csv(const RunConfig& config) {
    const double lambda0 = kTwoPi / resonance_frequency(config.scheme);
    const double d = config.d_lambda0 * lambda0;
    DosOptions options;
    options.force_broadened = config.force_broadened;
    options.forced_sigma = config.forced_sigma;
    const DosCurve curve = density_of_states(config.scheme, d, config.x0,
                                             config.omega_grid, options);
    std::string csv = "omega,density\n";
    for (std::size_t i = 0; i < curve.omega_grid.size(); ++i) {
        csv += fmt(curve.omega_grid[i]) + ',' + fmt(curve.density[i]) + '\n';
    }
    return csv;
}

std::string localization_csv(const RunConfig& config) {
    const auto estimates = localization_spectrum(config.scheme, config.disorder,
                                                 config.omega_grid, config.threads);
    std::string csv = "omega,inv_xi_mean,inv_xi_stderr,n_divergent\n";
    for (const LocalizationEstimate& est : estimates) {
        csv += fmt(est.omega) + ',' + fmt(est.inv_xi_mean) + ',' + fmt(est.inv_xi_stderr) + ',' +
               std::to_string(est.n_divergent) + '\n';
    }
    return csv;
}

std::string xi_vs_drive_csv(const RunConfig& config) {
    const auto& base = std::get<DrivenLambdaParams>(config.scheme);
    const auto estimates = xi_vs_drive(base, config.disorder, config.drive_omega,
                                       config.Omega_grid, config.threads);
    std::string csv = "Omega,inv_xi_mean,inv_xi_stderr,n_divergent\n";
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        const LocalizationEstimate& est = estimates[i];
        csv += fmt(config.Omega_grid[i]) + ',' + fmt(est.inv_xi_mean) + ',' +
               fmt(est.inv_xi_stderr) + ',' + std::to_string(est.n_divergent) + '\n';
    }
    return csv;
}

std::string error_record(const std::string& type, const std::string& message) {
    nlohmann::json record;
    record["error"]["type"] = type;
    record["error"]["message"] = message;
    return record.dump() + "\n";
}

}  // namespace

TaskOutput run(const RunConfig& config, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();

    std::string csv;
    if (config.task == "spectrum") {
        csv = spectrum_csv(config);
    } else if (config.task == "switch-map") {
        csv = switch_map_csv(config);
    } else if (config.task == "bands") {
        csv = bands_csv(config);
    } else if (config.task == "dos") {
        csv = dos_csv(config);
    } else if (config.task == "localization") {
        csv = localization_csv(config);
    } else if (config.task == "xi-vs-drive") {
        csv = xi_vs_drive_csv(config);
    } else {
        throw ConfigError("unknown task '" + config.task + "'");
    }

    const double wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");

    const fs::path csv_path = fs::path(out_dir) / config.csv_name;
    fs::path meta_path = csv_path;
    meta_path.replace_extension();
    meta_path += ".meta.json";

    nlohmann::json meta;
    meta["tool"] = "wqed";
    meta["version"] = "0.1.0";
    meta["task"] = config.task;
    meta["csv"] = config.csv_name;
    meta["threads"] = config.threads;
    meta["wall_time_s"] = wall_time;
    meta["config"] = config.resolved;

    atomic_write(csv_path, csv);
    atomic_write(meta_path, meta.dump(2) + "\n");
    return TaskOutput{csv_path.string(), meta_path.string()};
}

int run_file(const std::string& config_path, const std::string& out_dir,
             std::optional<int> threads_override,
             std::optional<std::uint64_t> seed_override,
             const std::optional<std::string>& expected_task, std::ostream& err) {
    try {
        const nlohmann::json doc = load_config_file(config_path);
        const RunConfig config = parse_config(doc, seed_override, threads_override);
        if (expected_task && config.task != *expected_task) {
            throw ConfigError("config task '" + config.task + "' does not match subcommand '" +
                              *expected_task + "'");
        }
        run(config, out_dir);
        return kExitOk;
    } catch (const ConfigError& e) {
        err << error_record("config", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << error_record("config", e.what());
        return kExitConfig;
    } catch (const NumericalError& e) {
        err << error_record("numerical", e.what());
        return kExitNumerical;
    } catch (const IoError& e) {
        err << error_record("io", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        err << error_record("internal", e.what());
        return kExitNumerical;
    }
}

}  // namespace wqed::cli
