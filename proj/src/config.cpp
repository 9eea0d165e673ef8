#include "prefixpoly/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "prefixpoly/errors.hpp"

namespace prefixpoly {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

nlohmann::json Config::to_json() const {
    return {{"seed", seed},           {"scan_limit", scan_limit},     {"pp_node_budget", pp_node_budget},
            {"mc_trials", mc_trials}, {"fan_points", fan_points},     {"random_cases", random_cases},
            {"directions", directions}};
}

Config parse_config(const std::string& text) {
    Config c;
    const std::map<std::string, std::uint64_t*> fields{
        {"seed", &c.seed},           {"scan_limit", &c.scan_limit}, {"pp_node_budget", &c.pp_node_budget},
        {"mc_trials", &c.mc_trials}, {"fan_points", &c.fan_points}, {"random_cases", &c.random_cases},
        {"directions", &c.directions}};
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const auto where = "config line " + std::to_string(lineno);
        if (eq == std::string::npos) throw DomainError(where + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = fields.find(key);
        if (it == fields.end()) throw DomainError(where + ": unknown key '" + key + "'");
        try {
            std::size_t used = 0;
            *it->second = std::stoull(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw DomainError(where + ": '" + value + "' is not a nonnegative integer");
        }
    }
    return c;
}

Config load_config(const std::string& path) {
    std::string p = path;
    if (p.empty())
        if (const char* env = std::getenv("PREFIXPOLY_CONFIG")) p = env;
    if (p.empty()) return Config{};
    std::ifstream f(p);
    if (!f) throw DomainError("cannot read config file '" + p + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace prefixpoly
