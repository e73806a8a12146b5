#pragma once

#include <string>
#include <vector>

namespace twspeed {

struct Check {
    std::string name;
    bool pass = false;
    bool hard = true;  // report-only checks never fail a suite
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
};

const std::vector<std::string>& suite_names();
// Throws invalid_input for an unknown suite name.
SuiteReport run_suite(const std::string& name);

}  // namespace twspeed
