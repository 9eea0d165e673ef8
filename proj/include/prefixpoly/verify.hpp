#pragma once

// Acceptance criteria shared by `prefixpoly verify` and the acceptance test.

#include <string>
#include <vector>

#include "prefixpoly/config.hpp"

namespace prefixpoly {

struct CriterionResult {
    unsigned id = 0;
    std::string name;
    bool passed = false;
    /// Failing by design: the stated formula is implemented as written and
    /// disagrees with the oracle.  Does not fail the suite.
    bool known_deviation = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr unsigned kCriterionCount = 21;

std::string criterion_name(unsigned id);
CriterionResult run_criterion(unsigned id, const Config& cfg);

/// Suite names: "all", a module name (volume, parking, lattice, posets,
/// treefan, probability) or a single criterion number.
std::vector<unsigned> suite_members(const std::string& suite);
std::vector<CriterionResult> run_suite(const std::string& suite, const Config& cfg);

/// One line: "PASS 07 plane partitions (0.01 s) ...".
std::string format_result(const CriterionResult& r);
/// True when every failure is a known deviation.
bool suite_ok(const std::vector<CriterionResult>& results);

}  // namespace prefixpoly
