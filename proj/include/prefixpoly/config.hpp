#pragma once

// Run configuration.  File format: one "key = value" per line, '#' starts a
// comment, blank lines ignored.  The path comes from --config, else from
// $PREFIXPOLY_CONFIG, else the built-in defaults are used.
//
//   seed             base seed for every randomized check      (42)
//   scan_limit       max points in an exhaustive box scan      (10000000)
//   pp_node_budget   max backtracking nodes for plane partitions (200000000)
//   mc_trials        Monte Carlo trials per estimate           (100000)
//   fan_points       random points in the fan sweep            (10000)
//   random_cases     random cases per randomized criterion     (200)
//   directions       random directions in the support check    (500)

#include <cstdint>
#include <string>

#include <json.hpp>

namespace prefixpoly {

struct Config {
    std::uint64_t seed = 42;
    std::uint64_t scan_limit = 10'000'000;
    std::uint64_t pp_node_budget = 200'000'000;
    std::uint64_t mc_trials = 100'000;
    std::uint64_t fan_points = 10'000;
    std::uint64_t random_cases = 200;
    std::uint64_t directions = 500;

    nlohmann::json to_json() const;
};

Config parse_config(const std::string& text);
/// Empty path: $PREFIXPOLY_CONFIG if set, else defaults.
Config load_config(const std::string& path = "");

}  // namespace prefixpoly
