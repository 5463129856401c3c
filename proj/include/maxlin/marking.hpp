#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "maxlin/reduce.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

enum class PivotRule {
    // Pivot on a variable with the fewest occurrences (ties: lowest index).
    MinOccurrence,
    // Pivot on the lowest-index variable still present in the system.
    FirstAvailable,
};

struct Mark {
    WeightedEquation equation;  // as it read at marking time
    std::uint32_t pivot_var = 0;
    std::uint32_t iteration = 0;  // 1-based
};

struct MarkTrace {
    std::vector<Mark> marks;
    LinearSystem residual;  // what remains after the loop stops
    LinearSystem original;  // the input system

    std::size_t equations_deleted() const { return original.size() - residual.size(); }
};

// One round of the marking loop: pick a pivot variable, mark and remove one
// equation containing it, add that equation into every other equation that
// contains the pivot (symmetric difference of lhs, xor of rhs), then merge
// identical left-hand sides. The pivot never reappears afterwards, which is
// what makes back-substitution through the marks well defined.
//
// Precondition: all lhs distinct (the merge rule keeps this invariant across
// rounds, so it only needs to hold on entry).
inline MarkTrace run_marking(const LinearSystem& system, std::size_t k, PivotRule rule) {
    if (!has_distinct_lhs(system))
        throw ContractError(
            "marking requires a system with distinct left-hand sides (merge rule first)");

    MarkTrace trace;
    trace.original = system;
    LinearSystem cur = system;

    while (!cur.empty() && trace.marks.size() < k) {
        std::vector<std::size_t> rho = occurrence_counts(cur);

        std::size_t pivot = cur.n_vars();
        if (rule == PivotRule::MinOccurrence) {
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = 0; i < rho.size(); ++i)
                if (rho[i] > 0 && rho[i] < best) {
                    best = rho[i];
                    pivot = i;
                }
        } else {
            for (std::size_t i = 0; i < rho.size(); ++i)
                if (rho[i] > 0) {
                    pivot = i;
                    break;
                }
        }
        if (pivot == cur.n_vars())
            throw InternalError("nonempty system with no occurring variable");

        std::size_t chosen = cur.size();
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (cur.equation(j).lhs.test(pivot)) {
                chosen = j;
                break;
            }

        WeightedEquation marked = cur.equation(chosen);
        trace.marks.push_back(Mark{marked, static_cast<std::uint32_t>(pivot),
                                   static_cast<std::uint32_t>(trace.marks.size() + 1)});

        LinearSystem next(cur.n_vars());
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (j == chosen) continue;
            WeightedEquation eq = cur.equation(j);
            if (eq.lhs.test(pivot)) {
                eq.lhs ^= marked.lhs;
                eq.rhs = eq.rhs != marked.rhs;
                // lhs distinctness rules out eq.lhs == marked.lhs here
                if (eq.lhs.none())
                    throw InternalError("pivot elimination emptied an equation");
            }
            next.add_equation(std::move(eq));
        }
        cur = apply_rule2(next);
    }

    trace.residual = std::move(cur);
    return trace;
}

}  // namespace maxlin
