#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "maxlin/system.hpp"

namespace maxlin {

struct BruteForceResult {
    std::int64_t opt_excess2 = 0;
    Assignment witness;
};

// Exact optimum of excess2 by enumerating all 2^n assignments. The counter's
// top bit maps to variable 0, so counting order is lexicographic order of
// assignments and strict improvement keeps the lexicographically smallest
// witness among ties.
inline BruteForceResult brute_force(const LinearSystem& system, std::size_t var_budget) {
    // 62 is the hard ceiling of the 64-bit enumeration counter.
    const std::size_t n = system.n_vars();
    if (n > var_budget || n > 62)
        throw BudgetExceededError(n, std::min<std::size_t>(var_budget, 62));

    BruteForceResult best;
    best.witness = Assignment(n);
    if (n == 0) {
        best.opt_excess2 = evaluate(system, best.witness).excess2;
        return best;
    }

    bool first = true;
    Assignment a(n);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        for (std::size_t i = 0; i < n; ++i) a.set(i, (c >> (n - 1 - i)) & 1u);
        std::int64_t ex = evaluate(system, a).excess2;
        if (first || ex > best.opt_excess2) {
            best.opt_excess2 = ex;
            best.witness = a;
            first = false;
        }
    }
    return best;
}

}  // namespace maxlin
