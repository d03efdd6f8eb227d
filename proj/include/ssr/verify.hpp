#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssr::verify {

// One measured property.  `value` is the observed metric and `limit` the
// threshold it was held against; `passed` is authoritative (some checks
// require the metric to exceed the limit, see `note`).
struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    bool passed = false;
    double seconds = 0.0;
    std::string note;
};

bool all_passed(const std::vector<Check>& checks);
double total_seconds(const std::vector<Check>& checks);

// Building blocks used directly by the acceptance program.
Check group_matrix_oracle(std::uint64_t seed);
Check algebra_commutators();
Check quadratic_identities();
std::vector<Check> pipeline_checks();
std::vector<Check> orthogonality_checks();
std::vector<Check> reconstruction_checks();
std::vector<Check> intertwining_checks(std::uint64_t seed);
std::vector<Check> image_checks();
std::vector<Check> fiducial_checks();

// Module-level suites (supersets of the blocks above).
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed);

} // namespace ssr::verify
