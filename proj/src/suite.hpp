#pragma once

#include <string>
#include <vector>

namespace vircat {

// One golden-value check from the published computations this library
// reproduces.
struct SuiteItem {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// Runs every golden-value check; deterministic order.
std::vector<SuiteItem> run_reference_suite();

bool suite_all_pass(const std::vector<SuiteItem>& items);

}  // namespace vircat
