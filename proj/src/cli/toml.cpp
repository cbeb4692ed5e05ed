#include "toml.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wqed::cli {

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

nlohmann::json parse_scalar(const std::string& token, int line) {
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
        return token.substr(1, token.size() - 2);
    }
    if (token == "true") return true;
    if (token == "false") return false;

    const bool looks_float = token.find_first_of(".eE") != std::string::npos ||
                             token == "inf" || token == "-inf" || token == "nan";
    char* end = nullptr;
    if (!looks_float) {
        const long long integer = std::strtoll(token.c_str(), &end, 10);
        if (end && *end == '\0' && !token.empty()) return integer;
    }
    const double value = std::strtod(token.c_str(), &end);
    if (!end || *end != '\0' || token.empty()) {
        fail(line, "cannot parse value '" + token + "'");
    }
    return value;
}

nlohmann::json parse_value(const std::string& token, int line) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']') fail(line, "unterminated array");
        nlohmann::json array = nlohmann::json::array();
        std::string inner = token.substr(1, token.size() - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = strip(item);
            if (item.empty()) fail(line, "empty array element");
            array.push_back(parse_scalar(item, line));
        }
        return array;
    }
    return parse_scalar(token, line);
}

/// Cut a trailing comment, respecting quoted strings.
std::string remove_comment(const std::string& s) {
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_string = !in_string;
        if (s[i] == '#' && !in_string) return s.substr(0, i);
    }
    return s;
}

}  // namespace

nlohmann::json parse_toml(const std::string& text) {
    nlohmann::json doc = nlohmann::json::object();
    nlohmann::json* current = &doc;
    std::istringstream stream(text);
    std::string raw;
    int line_number = 0;
    while (std::getline(stream, raw)) {
        ++line_number;
        const std::string line = strip(remove_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_number, "unterminated section header");
            const std::string name = strip(line.substr(1, line.size() - 2));
            if (!valid_key(name)) fail(line_number, "invalid section name '" + name + "'");
            if (doc.contains(name)) fail(line_number, "duplicate section '" + name + "'");
            doc[name] = nlohmann::json::object();
            current = &doc[name];
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_number, "expected 'key = value'");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (!valid_key(key)) fail(line_number, "invalid key '" + key + "'");
        if (value.empty()) fail(line_number, "missing value for '" + key + "'");
        if (current->contains(key)) fail(line_number, "duplicate key '" + key + "'");
        (*current)[key] = parse_value(value, line_number);
    }
    return doc;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();

    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(buffer.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("invalid JSON config: ") + e.what());
        }
        // A metadata sidecar carries the actual config under "config".
        if (doc.contains("config")) return doc["config"];
        return doc;
    }
    return parse_toml(buffer.str());
}

}  // namespace wqed::cli
