// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one numbered criterion per property group, each
// printed as a single pass/fail line with its sub-checks indented.
// Exit status is nonzero if any criterion fails.
#include <cstdio>
#include <vector>

#include "pqg/verify.hpp"

int main() {
    using pqg::verify::CheckResult;
    std::uint64_t const seed = 42;

    struct Criterion {
        char const* label;
        std::vector<CheckResult> results;
    };
    std::vector<Criterion> criteria;
    criteria.push_back({"skew-orthogonality relations",
                        pqg::verify::check_skew_orthogonality()});
    criteria.push_back({"weight-function oracles",
                        pqg::verify::check_weight_oracles()});
    criteria.push_back({"kernel equivalence",
                        pqg::verify::check_kernel_equivalence()});
    criteria.push_back({"correlation consistency",
                        pqg::verify::check_correlation_consistency()});
    criteria.push_back({"radial density", pqg::verify::check_radial_density()});
    criteria.push_back({"erfc asymptotics", pqg::verify::check_asymptotics()});
    criteria.push_back({"microscopic limits",
                        pqg::verify::check_microscopic_limits()});
    criteria.push_back({"Monte Carlo validation",
                        pqg::verify::check_monte_carlo(seed)});
    criteria.push_back({"determinism", pqg::verify::check_determinism(seed)});

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool passed = true;
        for (auto const& r : criteria[i].results) passed = passed && r.passed;
        std::printf("criterion %zu (%s): %s\n", i + 1, criteria[i].label,
                    passed ? "PASS" : "FAIL");
        for (auto const& r : criteria[i].results) {
            std::printf("  %s %s: %s\n", r.passed ? "ok  " : "FAIL",
                        r.name.c_str(), r.detail.c_str());
        }
        all_passed = all_passed && passed;
    }
    std::printf("%s\n", all_passed ? "ACCEPTANCE: ALL CRITERIA PASSED"
                                   : "ACCEPTANCE: FAILURES PRESENT");
    return all_passed ? 0 : 1;
}
