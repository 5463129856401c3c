#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "maxlin/brute_force.hpp"
#include "maxlin/greedy.hpp"
#include "maxlin/marking.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

inline constexpr std::size_t kDefaultVarBudget = 28;

// Sufficient condition for min-occurrence pivoting to reach k marks on a
// merge-irreducible system: n >= 2^k * r_max, where r_max is the largest
// equation size. Saturating: once 2^k cannot be represented the bound can
// only hold for r_max == 0.
inline bool min_occurrence_guarantee(std::size_t n_vars, std::size_t r_max, std::size_t k) {
    if (r_max == 0) return true;
    if (k >= 63) return false;
    const std::uint64_t pow = std::uint64_t{1} << k;
    if (r_max > std::numeric_limits<std::uint64_t>::max() / pow)
        return false;  // 2^k * r_max saturates, so it exceeds any real n
    return n_vars >= pow * r_max;
}

// Sufficient condition for arbitrary (first-available) pivoting to reach k
// marks on a fully reduced system: k == 0 or 2 * rho * (k-1) < m.
inline bool first_available_guarantee(std::size_t m, std::size_t rho, std::size_t k) {
    if (k == 0) return true;
    const std::uint64_t a = rho, b = k - 1;
    if (a == 0 || b == 0) return 0 < m;
    if (a > std::numeric_limits<std::uint64_t>::max() / 2 ||
        b > std::numeric_limits<std::uint64_t>::max() / (2 * a))
        return false;
    return 2 * a * b < m;
}

enum class Strategy { Auto, Theorem1, Theorem2, Brute };

// How a verdict was actually reached. The serialized tags are fixed strings
// of the result format: algorithm_a, brute_force, k_zero_greedy.
enum class DecidedBy { MarkingRun, BruteForce, ZeroExcessGreedy };

struct VerdictStats {
    std::size_t iterations = 0;         // marking rounds run
    std::size_t equations_deleted = 0;  // marked plus cancelled during marking
    std::size_t residual_size = 0;

    friend bool operator==(const VerdictStats&, const VerdictStats&) = default;
};

struct Verdict {
    bool yes = false;
    std::optional<Assignment> witness;               // present iff yes
    std::optional<std::int64_t> certificate_excess2;  // present iff no: the exact optimum
    DecidedBy decided_by = DecidedBy::BruteForce;
    VerdictStats stats;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

inline Assignment lift_witness(const Assignment& reduced_witness,
                               const std::vector<std::uint32_t>& var_map,
                               std::size_t n_original) {
    Assignment out(n_original);  // variables dropped by reduction stay 0
    for (std::size_t i = 0; i < var_map.size(); ++i)
        out.set(var_map[i], reduced_witness.get(i));
    return out;
}

inline void verify_yes_witness(const LinearSystem& original, const Assignment& witness,
                               std::int64_t k) {
    if (evaluate(original, witness).excess2 < k)
        throw InternalError("yes verdict failed re-verification on the original system");
}

}  // namespace detail

// Decide whether some assignment reaches excess2 >= k (satisfied weight at
// least (W+k)/2). The input is reduced to the two-rule fixpoint first; any
// witness found on the reduced system is lifted back (dropped variables get
// value 0) and re-verified against the original input before "yes" is
// reported. "No" always carries the exact brute-force optimum.
//
// Strategies:
//   Brute     exhaustive oracle on the reduced system.
//   Theorem1  run the marking loop with min-occurrence pivots when the
//             variable-count guarantee holds, otherwise brute force.
//   Theorem2  run it with first-available pivots when the occurrence
//             guarantee holds, otherwise brute force.
//   Auto      always try the marking loop (it is polynomial and may certify
//             yes even when no guarantee holds), brute force as backstop.
//
// Reaching fewer than k marks is never treated as "no"; brute force decides.
inline Verdict decide(const LinearSystem& system, std::size_t k, Strategy strategy,
                      std::size_t var_budget = kDefaultVarBudget) {
    if (k == 0) {
        Assignment witness = half_weight_greedy(system);
        detail::verify_yes_witness(system, witness, 0);
        return Verdict{true, std::move(witness), std::nullopt, DecidedBy::ZeroExcessGreedy, {}};
    }

    ReducedSystem reduced = reduce_to_fixpoint(system);
    const LinearSystem& rs = reduced.system;

    std::optional<PivotRule> marking_rule;
    switch (strategy) {
        case Strategy::Auto:
            marking_rule = PivotRule::MinOccurrence;
            break;
        case Strategy::Theorem1:
            if (min_occurrence_guarantee(rs.n_vars(), rs.max_equation_size(), k))
                marking_rule = PivotRule::MinOccurrence;
            break;
        case Strategy::Theorem2:
            if (first_available_guarantee(rs.size(), max_occurrence(rs), k))
                marking_rule = PivotRule::FirstAvailable;
            break;
        case Strategy::Brute:
            break;
    }

    VerdictStats stats;
    if (marking_rule) {
        MarkTrace trace = run_marking(rs, k, *marking_rule);
        stats.iterations = trace.marks.size();
        stats.equations_deleted = trace.equations_deleted();
        stats.residual_size = trace.residual.size();
        if (trace.marks.size() == k) {
            Assignment z = extend_through_marks(trace, half_weight_greedy(trace.residual));
            Assignment witness = detail::lift_witness(z, reduced.var_map, system.n_vars());
            detail::verify_yes_witness(system, witness, static_cast<std::int64_t>(k));
            return Verdict{true, std::move(witness), std::nullopt, DecidedBy::MarkingRun,
                           stats};
        }
    }

    BruteForceResult bf = brute_force(rs, var_budget);
    if (bf.opt_excess2 >= static_cast<std::int64_t>(k)) {
        Assignment witness = detail::lift_witness(bf.witness, reduced.var_map, system.n_vars());
        detail::verify_yes_witness(system, witness, static_cast<std::int64_t>(k));
        return Verdict{true, std::move(witness), std::nullopt, DecidedBy::BruteForce, stats};
    }
    return Verdict{false, std::nullopt, bf.opt_excess2, DecidedBy::BruteForce, stats};
}

}  // namespace maxlin
