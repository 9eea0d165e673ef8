// One line per acceptance criterion; exit status 1 on any unexpected failure.

#include <iostream>

#include "prefixpoly/verify.hpp"

int main(int argc, char** argv) {
    const auto cfg = prefixpoly::load_config(argc > 1 ? argv[1] : "");
    const auto results = prefixpoly::run_suite("all", cfg);
    unsigned passed = 0;
    for (const auto& r : results) {
        std::cout << prefixpoly::format_result(r) << std::endl;
        passed += r.passed;
    }
    const bool ok = prefixpoly::suite_ok(results);
    std::cout << passed << "/" << results.size() << " criteria passed" << (ok ? "" : "; suite FAILED") << std::endl;
    return ok ? 0 : 1;
}
