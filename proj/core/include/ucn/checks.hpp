#pragma once

#include <string>
#include <vector>

namespace ucn {

struct CheckReport {
    std::string suite;
    int checks = 0;
    int failed = 0;
    std::vector<std::string> failures;
    bool ok() const { return failed == 0; }
};

// Named invariant bundles behind `ucn check`. Suites: "forms", "descent",
// "enriques", "gasket". Unknown names throw InvalidInput.
CheckReport run_check_suite(const std::string& suite);

std::vector<std::string> check_suite_names();

} // namespace ucn
