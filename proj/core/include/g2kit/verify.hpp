#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/structure.hpp"

namespace g2kit {

struct VerifyOptions {
    std::string suite = "all";  // g2 | spin7 | cy3 | diffops | all
    std::uint64_t seed = 0;
    int trials = 100;
    int max_degree = 3;
    /// Negative controls: flip the sign of one canonical-order term of the
    /// structure forms before running the suites.
    std::optional<int> corrupt_phi_blade;
    std::optional<int> corrupt_psi_blade;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or error text when failing
};

bool valid_suite_name(const std::string& s);

/// Runs the requested identity suites; deterministic for fixed options.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

/// Reference blade tables transcribed from the standard printed expansions;
/// the derived structure forms must reproduce them term for term.
FormQ reference_phi(Convention c);
FormQ reference_psi(Convention c);
FormQ reference_big_phi();

}  // namespace g2kit
