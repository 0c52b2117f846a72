/**
 * @file verify.hpp
 * @brief Named verification checks over the whole engine: defining relations,
 *        confluence, Hopf axioms, the pairing table and its compatibilities,
 *        the 24 explicit action formulas, structural laws of the double, the
 *        18 classical limits and the Lie-bracket tables.
 *
 * Every check is exact-symbolic and deterministic; the runner reports one
 * pass/fail entry per check with both sides rendered on failure.
 */
#pragma once

#include <qmobius/action.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qmobius {

struct CheckResult {
    std::string name;
    std::string presentation;  // funq, uq, pairing, double, classical
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerifyOptions {
    std::string scope = "all";
    int degree_cap = 8;
    // testing fixture: presentation name ("funq"/"uq") and rule index to corrupt
    std::optional<std::pair<std::string, int>> corrupt;
};

struct VerifyReport {
    std::string scope;
    std::string convention;
    bool convention_unique = true;
    std::vector<CheckResult> checks;  // sorted by name
    int passed = 0;
    int failed = 0;
    bool all_passed() const { return failed == 0; }
};

/// Known scopes: all, relations, hopf, pairing, 13a, 13b, structure (alias
/// laws), limits, brackets. Throws std::invalid_argument on an unknown scope.
VerifyReport run_verification_suite(const VerifyOptions& options);

std::string report_text(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

} // namespace qmobius
