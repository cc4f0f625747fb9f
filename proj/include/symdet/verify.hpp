#ifndef SYMDET_VERIFY_HPP
#define SYMDET_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "symdet/schur_rank.hpp"

namespace symdet {

struct VerifyOptions {
    int n_max = 6;
    int t_max = -1;                  // negative: n_max - 1
    int oracle_cap = default_ssyt_cap;
    RankFn rank = schur_rank;        // replaceable for fault injection
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string counterexample;      // first failure, empty when passed
};

/* Runs every invariant suite: partition identities, the tableau oracle
 * against the rank formula, the Q-set construction against its filter,
 * and per-(n, t) resolution and classification checks over the grid
 * 1 <= t < n <= n_max, t <= t_max. Grid cells run in parallel; results are
 * returned in a fixed order. */
std::vector<PropertyResult> run_verify(const VerifyOptions& opts);

inline bool all_passed(const std::vector<PropertyResult>& results)
{
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace symdet

#endif
