#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "prefixpoly/config.hpp"
#include "prefixpoly/errors.hpp"

using namespace prefixpoly;

TEST_CASE("defaults") {
    const Config c = parse_config("");
    CHECK(c.seed == 42);
    CHECK(c.scan_limit == 10'000'000);
    CHECK(c.mc_trials == 100'000);
    CHECK(c.to_json()["random_cases"] == 200);
}

TEST_CASE("overrides, comments and errors") {
    const Config c = parse_config("# tuned\nseed = 7\n\nmc_trials=500\n");
    CHECK(c.seed == 7);
    CHECK(c.mc_trials == 500);
    CHECK(c.directions == 500);
    CHECK_THROWS_AS(parse_config("colour=blue\n"), DomainError);
    CHECK_THROWS_AS(parse_config("seed\n"), DomainError);
    CHECK_THROWS_AS(parse_config("seed=abc\n"), DomainError);
}

TEST_CASE("file and environment lookup") {
    const auto path = std::filesystem::temp_directory_path() / "prefixpoly_test.conf";
    {
        std::ofstream out(path);
        out << "seed=99\n";
    }
    CHECK(load_config(path.string()).seed == 99);
    ::setenv("PREFIXPOLY_CONFIG", path.c_str(), 1);
    CHECK(load_config().seed == 99);
    ::unsetenv("PREFIXPOLY_CONFIG");
    CHECK(load_config().seed == 42);
    std::filesystem::remove(path);
    CHECK_THROWS(load_config(path.string()));
}
