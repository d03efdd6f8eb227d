// Acceptance gate: nine criteria, one line each, exit 0 only if all pass.
// Each criterion has a wall-clock budget in seconds; the checks and their
// numeric limits live in the verification library so the CLI `verify`
// command exercises exactly the same code.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ssr/verify.hpp"

namespace {

using ssr::verify::Check;

constexpr std::uint64_t kSeed = 20260825;

struct Criterion {
    const char* name;
    double budget_seconds;
    std::vector<Check> (*run)();
};

std::vector<Check> criterion_group() { return {ssr::verify::group_matrix_oracle(kSeed)}; }
std::vector<Check> criterion_algebra() { return {ssr::verify::algebra_commutators()}; }
std::vector<Check> criterion_quadratic() { return {ssr::verify::quadratic_identities()}; }
std::vector<Check> criterion_pipeline() { return ssr::verify::pipeline_checks(); }
std::vector<Check> criterion_orthogonality() { return ssr::verify::orthogonality_checks(); }
std::vector<Check> criterion_reconstruction() { return ssr::verify::reconstruction_checks(); }
std::vector<Check> criterion_intertwining() { return ssr::verify::intertwining_checks(kSeed); }
std::vector<Check> criterion_image() { return ssr::verify::image_checks(); }
std::vector<Check> criterion_fiducial() { return ssr::verify::fiducial_checks(); }

const Criterion kCriteria[] = {
    {"group law matches the matrix oracle", 1.0, criterion_group},
    {"derived action closes the commutator table", 1.0, criterion_algebra},
    {"second-order identities vanish", 1.0, criterion_quadratic},
    {"fast pipeline agrees with quadrature and is isometric", 30.0, criterion_pipeline},
    {"orthogonality relation holds", 30.0, criterion_orthogonality},
    {"reconstruction inverts the transform", 30.0, criterion_reconstruction},
    {"transform intertwines the two actions", 60.0, criterion_intertwining},
    {"image-space conditions characterize the range", 120.0, criterion_image},
    {"fiducial construction is certified", 10.0, criterion_fiducial},
};

} // namespace

int main() {
    int failures = 0;
    const int total = static_cast<int>(std::size(kCriteria));
    for (int i = 0; i < total; ++i) {
        const Criterion& c = kCriteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Check> checks;
        std::string error;
        try {
            checks = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const bool checks_ok = error.empty() && ssr::verify::all_passed(checks);
        const bool in_budget = elapsed < c.budget_seconds;
        const bool ok = checks_ok && in_budget;
        if (!ok) ++failures;

        int passed = 0;
        for (const Check& ch : checks) passed += ch.passed ? 1 : 0;
        std::printf("[%d/%d] %s  %s (%d/%d checks, %.2f s < %.0f s)\n", i + 1, total,
                    ok ? "PASS" : "FAIL", c.name, passed, static_cast<int>(checks.size()),
                    elapsed, c.budget_seconds);
        if (!error.empty()) std::printf("        error: %s\n", error.c_str());
        for (const Check& ch : checks) {
            if (!ch.passed) {
                std::printf("        failing: %s/%s value %.6e limit %.6e %s\n", ch.suite.c_str(),
                            ch.name.c_str(), ch.value, ch.limit, ch.note.c_str());
            }
        }
        if (checks_ok && !in_budget) std::printf("        over budget\n");
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %d criteria passed\n", total);
        return 0;
    }
    std::printf("acceptance: %d of %d criteria FAILED\n", failures, total);
    return 1;
}
