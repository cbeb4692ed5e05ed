#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace wqed::cli {

/// Configuration file problem: syntax, schema or value errors.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem problem while reading inputs or writing results.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse a TOML subset into a JSON object tree: `# comments`,
/// `[section]` headers (one level), and `key = value` pairs with string,
/// boolean, integer, float or flat-array values. Inline tables and
/// multi-line strings are not supported; configs here never need them.
nlohmann::json parse_toml(const std::string& text);

/// Load a config file: .json files are read directly (a metadata sidecar
/// is accepted and unwrapped to its "config" object), anything else is
/// parsed as TOML.
nlohmann::json load_config_file(const std::string& path);

}  // namespace wqed::cli
