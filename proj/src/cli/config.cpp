#include "config.hpp"

#include <cmath>
#include <set>

#include "toml.hpp"

namespace wqed::cli {

namespace {

/// Typed access to one section with unknown-key detection.
class Section {
public:
    Section(const nlohmann::json& parent, const std::string& name, bool required)
        : name_(name) {
        if (parent.contains(name)) {
            if (!parent[name].is_object()) {
                throw ConfigError("section '" + name + "' must be a table");
            }
            data_ = parent[name];
            present_ = true;
        } else if (required) {
            throw ConfigError("missing required section [" + name + "]");
        }
    }

    bool present() const { return present_; }

    double number(const std::string& key) {
        require_present(key);
        return as_number(key);
    }

    double number(const std::string& key, double fallback) {
        if (!data_.contains(key)) {
            resolved_[key] = fallback;
            return fallback;
        }
        return as_number(key);
    }

    long long integer(const std::string& key) {
        require_present(key);
        return as_integer(key);
    }

    long long integer(const std::string& key, long long fallback) {
        if (!data_.contains(key)) {
            resolved_[key] = fallback;
            return fallback;
        }
        return as_integer(key);
    }

    std::string text(const std::string& key) {
        require_present(key);
        if (!data_[key].is_string()) {
            throw ConfigError(where(key) + " must be a string");
        }
        used_.insert(key);
        resolved_[key] = data_[key];
        return data_[key].get<std::string>();
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!data_.contains(key)) {
            resolved_[key] = fallback;
            return fallback;
        }
        if (!data_[key].is_boolean()) throw ConfigError(where(key) + " must be a boolean");
        used_.insert(key);
        resolved_[key] = data_[key];
        return data_[key].get<bool>();
    }

    bool has(const std::string& key) const { return data_.contains(key); }

    /// Call after extraction: any key never read is an error.
    void finish() {
        for (const auto& item : data_.items()) {
            if (!used_.count(item.key())) {
                throw ConfigError("unknown key '" + item.key() + "' in section [" + name_ + "]");
            }
        }
    }

    nlohmann::json resolved() const { return resolved_; }

private:
    void require_present(const std::string& key) {
        if (!data_.contains(key)) {
            throw ConfigError("missing key '" + key + "' in section [" + name_ + "]");
        }
    }

    double as_number(const std::string& key) {
        if (!data_[key].is_number()) throw ConfigError(where(key) + " must be a number");
        used_.insert(key);
        resolved_[key] = data_[key];
        return data_[key].get<double>();
    }

    long long as_integer(const std::string& key) {
        if (!data_[key].is_number_integer()) {
            throw ConfigError(where(key) + " must be an integer");
        }
        used_.insert(key);
        resolved_[key] = data_[key];
        return data_[key].get<long long>();
    }

    std::string where(const std::string& key) const {
        return "key '" + key + "' in section [" + name_ + "]";
    }

    std::string name_;
    nlohmann::json data_ = nlohmann::json::object();
    nlohmann::json resolved_ = nlohmann::json::object();
    std::set<std::string> used_;
    bool present_ = false;
};

std::vector<double> make_grid(double lo, double hi, long long count, const std::string& what) {
    if (count < 1) throw ConfigError(what + ": grid must be nonempty (count >= 1)");
    if (count == 1) return {lo};
    if (!(hi > lo)) throw ConfigError(what + ": need max > min");
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return grid;
}

EmitterScheme parse_scheme(Section& scheme, double unit) {
    const std::string type = scheme.text("type");
    EmitterScheme result;
    if (type == "two_level") {
        TwoLevelParams p;
        p.omega0 = unit * scheme.number("omega0");
        p.gamma = unit * scheme.number("gamma", 0.0);
        p.Gamma = unit * scheme.number("Gamma");
        result = p;
    } else if (type == "driven_lambda") {
        DrivenLambdaParams p;
        p.E2 = unit * scheme.number("E2");
        p.Delta = unit * scheme.number("Delta", 0.0);
        p.Omega = unit * scheme.number("Omega", 0.0);
        p.gamma2 = unit * scheme.number("gamma2", 0.0);
        p.gamma3 = unit * scheme.number("gamma3", 0.0);
        p.Gamma = unit * scheme.number("Gamma");
        result = p;
    } else if (type == "lambda_raman") {
        LambdaTwoTransitionParams p;
        p.E1 = unit * scheme.number("E1", 0.0);
        p.E3 = unit * scheme.number("E3");
        p.E2 = unit * scheme.number("E2");
        p.gamma = unit * scheme.number("gamma", 0.0);
        p.Gamma1 = unit * scheme.number("Gamma1");
        p.Gamma3 = unit * scheme.number("Gamma3");
        result = p;
    } else if (type == "driven_v") {
        DrivenVParams p;
        p.E2 = unit * scheme.number("E2");
        p.Delta = unit * scheme.number("Delta", 0.0);
        p.Omega = unit * scheme.number("Omega");
        p.gamma = unit * scheme.number("gamma", 0.0);
        p.Gamma = unit * scheme.number("Gamma");
        result = p;
    } else if (type == "v_two_transition") {
        VTwoTransitionParams p;
        p.E2 = unit * scheme.number("E2");
        p.E3 = unit * scheme.number("E3");
        p.gamma2 = unit * scheme.number("gamma2", 0.0);
        p.gamma3 = unit * scheme.number("gamma3", 0.0);
        p.Gamma2 = unit * scheme.number("Gamma2");
        p.Gamma3 = unit * scheme.number("Gamma3");
        result = p;
    } else {
        throw ConfigError("unknown scheme type '" + type + "'");
    }
    scheme.finish();
    try {
        validate(result);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid scheme parameters: ") + e.what());
    }
    return result;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc,
                       std::optional<std::uint64_t> seed_override,
                       std::optional<int> threads_override) {
    if (!doc.is_object()) throw ConfigError("config root must be a table");

    static const std::set<std::string> known_tasks = {
        "spectrum", "switch-map", "bands", "dos", "localization", "xi-vs-drive"};
    static const std::set<std::string> known_sections = {
        "scheme", "grid", "lattice", "switch", "disorder", "drive", "output"};
    static const std::set<std::string> known_scalars = {"task", "omega0", "threads"};

    for (const auto& item : doc.items()) {
        if (known_sections.count(item.key())) {
            continue;
        }
        if (known_scalars.count(item.key())) {
            if (item.value().is_object()) {
                throw ConfigError("'" + item.key() + "' must be a scalar");
            }
            continue;
        }
        throw ConfigError("unknown section or key '" + item.key() + "'");
    }

    RunConfig run;
    nlohmann::json resolved = nlohmann::json::object();

    if (!doc.contains("task") || !doc["task"].is_string()) {
        throw ConfigError("missing top-level 'task' string");
    }
    run.task = doc["task"].get<std::string>();
    if (!known_tasks.count(run.task)) throw ConfigError("unknown task '" + run.task + "'");
    resolved["task"] = run.task;

    double unit = 1.0;
    if (doc.contains("omega0")) {
        if (!doc["omega0"].is_number()) throw ConfigError("'omega0' must be a number");
        unit = doc["omega0"].get<double>();
        if (!(unit > 0.0) || !std::isfinite(unit)) {
            throw ConfigError("'omega0' must be positive and finite");
        }
    }
    resolved["omega0"] = unit;

    run.threads = 1;
    if (doc.contains("threads")) {
        if (!doc["threads"].is_number_integer()) throw ConfigError("'threads' must be an integer");
        run.threads = doc["threads"].get<int>();
    }
    if (threads_override) run.threads = *threads_override;
    if (run.threads < 1) throw ConfigError("'threads' must be >= 1");
    resolved["threads"] = run.threads;

    Section scheme_section(doc, "scheme", true);
    run.scheme = parse_scheme(scheme_section, unit);
    resolved["scheme"] = scheme_section.resolved();

    const bool needs_grid = run.task == "spectrum" || run.task == "bands" ||
                            run.task == "dos" || run.task == "localization";
    if (needs_grid) {
        Section grid(doc, "grid", true);
        const double lo = unit * grid.number("min");
        const double hi = unit * grid.number("max");
        const long long count = grid.integer("count");
        grid.finish();
        run.omega_grid = make_grid(lo, hi, count, "[grid]");
        if (run.omega_grid.empty()) throw ConfigError("grid must be nonempty");
        resolved["grid"] = grid.resolved();
    }

    if (run.task == "bands" || run.task == "dos") {
        Section lattice(doc, "lattice", true);
        run.d_lambda0 = lattice.number("d");
        if (!(run.d_lambda0 > 0.0)) throw ConfigError("[lattice] d must be > 0");
        if (run.task == "dos") {
            run.x0 = lattice.number("x0", 0.5);
            if (!(run.x0 >= 0.0 && run.x0 <= 1.0)) {
                throw ConfigError("[lattice] x0 must lie in [0, 1] (units of d)");
            }
            run.force_broadened = lattice.boolean("broadened", false);
            if (lattice.has("sigma")) {
                run.forced_sigma = unit * lattice.number("sigma");
                if (!(*run.forced_sigma > 0.0)) {
                    throw ConfigError("[lattice] sigma must be > 0");
                }
            }
        }
        lattice.finish();
        resolved["lattice"] = lattice.resolved();
    }

    if (run.task == "switch-map") {
        Section sw(doc, "switch", true);
        run.gamma_grid = make_grid(unit * sw.number("gamma_min"), unit * sw.number("gamma_max"),
                                   sw.integer("gamma_count"), "[switch] gamma");
        run.sigma_grid = make_grid(unit * sw.number("sigma_min"), unit * sw.number("sigma_max"),
                                   sw.integer("sigma_count"), "[switch] sigma");
        sw.finish();
        if (!std::holds_alternative<DrivenVParams>(run.scheme)) {
            throw ConfigError("switch-map requires a driven_v scheme");
        }
        resolved["switch"] = sw.resolved();
    }

    if (run.task == "localization" || run.task == "xi-vs-drive") {
        Section dis(doc, "disorder", true);
        run.disorder.n_emitters = static_cast<int>(dis.integer("n_emitters"));
        run.disorder.n_realizations = static_cast<int>(dis.integer("n_realizations"));
        run.disorder.d_min = dis.number("d_min");
        run.disorder.d_max = dis.number("d_max");
        const long long seed = dis.integer("seed", 0);
        run.disorder.seed =
            seed_override ? *seed_override : static_cast<std::uint64_t>(seed);
        dis.finish();
        try {
            run.disorder.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid [disorder]: ") + e.what());
        }
        nlohmann::json dis_resolved = dis.resolved();
        dis_resolved["seed"] = run.disorder.seed;
        resolved["disorder"] = dis_resolved;
    }

    if (run.task == "xi-vs-drive") {
        Section drive(doc, "drive", true);
        run.drive_omega = unit * drive.number("omega");
        run.Omega_grid = make_grid(unit * drive.number("Omega_min"),
                                   unit * drive.number("Omega_max"),
                                   drive.integer("Omega_count"), "[drive] Omega");
        drive.finish();
        if (!std::holds_alternative<DrivenLambdaParams>(run.scheme)) {
            throw ConfigError("xi-vs-drive requires a driven_lambda scheme");
        }
        resolved["drive"] = drive.resolved();
    }

    Section output(doc, "output", true);
    run.csv_name = output.text("csv");
    output.finish();
    if (run.csv_name.empty()) throw ConfigError("[output] csv must be a nonempty file name");
    resolved["output"] = output.resolved();

    run.resolved = resolved;
    return run;
}

}  // namespace wqed::cli
