#pragma once

#include <cstdint>
#include <vector>

#include "maxlin/marking.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

// Sequential half-weight assignment: variables are fixed in increasing index
// order; before fixing variable j every equation is simplified under the
// partial assignment, and j takes whichever value satisfies at least half of
// the current unit-equation weight on j (ties to 0). Every equation resolves
// as a unit equation once its last variable comes up, so the result always
// satisfies at least W/2, i.e. excess2 >= 0.
inline Assignment half_weight_greedy(const LinearSystem& system) {
    const std::size_t n = system.n_vars();
    struct Pending {
        BitVec lhs;
        bool rhs;
        Weight weight;
        bool alive;
    };
    std::vector<Pending> eqs;
    eqs.reserve(system.size());
    for (const auto& eq : system.equations())
        eqs.push_back(Pending{eq.lhs, eq.rhs, eq.weight, true});

    Assignment a(n);
    for (std::size_t j = 0; j < n; ++j) {
        Weight w0 = 0, w1 = 0;
        for (const auto& p : eqs) {
            if (!p.alive || !p.lhs.test(j) || p.lhs.count() != 1) continue;
            if (p.rhs)
                w1 = checked_weight_add(w1, p.weight);
            else
                w0 = checked_weight_add(w0, p.weight);
        }
        bool value = w1 > w0;
        a.set(j, value);
        for (auto& p : eqs) {
            if (!p.alive || !p.lhs.test(j)) continue;
            p.lhs.reset(j);
            p.rhs = p.rhs != value;
            if (p.lhs.none()) p.alive = false;  // resolved to 0 = rhs
        }
    }
    return a;
}

// Back-substitution through a mark trace. Marks are processed newest first;
// each pivot is set so its recorded equation is satisfied given the values
// fixed so far. A pivot occurs in no residual equation and in no later mark,
// so earlier choices are never disturbed and every marked equation ends up
// satisfied. `residual_assignment` must cover all n variables; entries for
// non-residual, non-pivot variables are free.
inline Assignment extend_through_marks(const MarkTrace& trace,
                                       const Assignment& residual_assignment) {
    if (residual_assignment.size() != trace.original.n_vars())
        throw DimensionError("residual assignment length does not match the traced system");
    Assignment a = residual_assignment;
    for (auto it = trace.marks.rbegin(); it != trace.marks.rend(); ++it) {
        bool acc = it->equation.rhs;
        it->equation.lhs.for_each_set([&](std::size_t i) {
            if (i != it->pivot_var) acc = acc != a.get(i);
        });
        a.set(it->pivot_var, acc);
    }
    return a;
}

}  // namespace maxlin
