// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pqg::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    bool include_monte_carlo = true;  // the slow chi-square block
    std::uint64_t seed = 42;
};

// One group per acceptance area; `run_all` concatenates them in order.
std::vector<CheckResult> check_skew_orthogonality();
std::vector<CheckResult> check_weight_oracles();
std::vector<CheckResult> check_kernel_equivalence();
std::vector<CheckResult> check_correlation_consistency();
std::vector<CheckResult> check_radial_density();
std::vector<CheckResult> check_asymptotics();
std::vector<CheckResult> check_microscopic_limits();
std::vector<CheckResult> check_monte_carlo(std::uint64_t seed);
std::vector<CheckResult> check_determinism(std::uint64_t seed);

std::vector<CheckResult> run_all(Options const& options);

nlohmann::json to_json(std::vector<CheckResult> const& results);

}  // namespace pqg::verify
