#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deligne/caps.hpp"

namespace deligne {

struct VerifyOptions {
    int t_lo = -3;
    int t_hi = 3;
    int max_size = 4;
    std::uint64_t seed = 7;
};

/// Outcome of one named check. Advisory checks report a measurement and
/// never count as failures.
struct CheckResult {
    std::string module;
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string detail;
    bool advisory = false;

    bool passed() const noexcept { return advisory || failures == 0; }
};

/// Runs every invariant check, grouped by module, in a fixed order.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// Whether `caps` satisfies the cap conditions on `labels` (positions
/// first .. first + labels.size() - 1): non-crossing, every cross is the left
/// end of exactly one cap ending at a circle to its right, and every circle
/// strictly inside a cap is a right end.
bool satisfies_cap_conditions(const std::vector<Symbol>& labels, int first, const std::vector<Cap>& caps);

/// All cap sets satisfying the cap conditions, by exhaustive search.
std::vector<std::vector<Cap>> all_valid_matchings(const std::vector<Symbol>& labels, int first);

/// A bipartition obtained from mu by sliding the crosses of its cap diagram
/// at the positions in `moved` to the right ends of their caps.
Bipartition slide_crosses(const Bipartition& mu, int t, const std::vector<int>& moved);

/// A bipartition obtained from lambda by sliding the crosses at the
/// positions in `moved`, each the right end of a lift cap of d'_lambda, to
/// the left ends of those caps.
Bipartition unslide_crosses(const Bipartition& lambda, int t, const std::vector<int>& moved);

}  // namespace deligne
