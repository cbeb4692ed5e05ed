#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tasks.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    int threads = 0;        // 0: unset
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
    cmd->add_option("--config", opts->config_path, "config file (.toml, or a .meta.json sidecar)")
        ->required();
    cmd->add_option("--out", opts->out_dir, "output directory (default: current directory)");
    cmd->add_option("--threads", opts->threads, "worker threads (fallback: WQED_THREADS)");
    cmd->add_option("--seed", opts->seed, "override the config RNG seed")
        ->each([opts](const std::string&) { opts->seed_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon scattering, transistor, band and localization "
                 "calculations for emitters coupled to a 1D waveguide"};
    app.require_subcommand(1);

    const struct {
        const char* name;
        const char* description;
    } tasks[] = {
        {"spectrum", "transmission/reflection spectrum of one emitter"},
        {"switch-map", "transistor switching probability over (gamma, sigma)"},
        {"bands", "Bloch bands and gaps of a periodic emitter array"},
        {"dos", "impurity-weighted density of states of the array"},
        {"localization", "localization length spectrum of a disordered array"},
        {"xi-vs-drive", "localization length versus drive strength"},
    };

    CommonOptions opts;
    for (const auto& task : tasks) {
        CLI::App* cmd = app.add_subcommand(task.name, task.description);
        add_common(cmd, &opts);
    }

    CLI11_PARSE(app, argc, argv);

    const std::string task_name = app.get_subcommands().front()->get_name();

    std::optional<int> threads;
    if (opts.threads > 0) {
        threads = opts.threads;
    } else if (const char* env = std::getenv("WQED_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) threads = parsed;
    }

    std::optional<std::uint64_t> seed;
    if (opts.seed_set) seed = opts.seed;

    return wqed::cli::run_file(opts.config_path, opts.out_dir, threads, seed, task_name,
                               std::cerr);
}
