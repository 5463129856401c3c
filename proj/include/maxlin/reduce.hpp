#pragma once

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maxlin/system.hpp"

namespace maxlin {

// Rule 2 (merge rule): equations sharing a left-hand side are combined.
// Same rhs: weights add. Opposing rhs: the majority side survives with the
// weight difference; an exact tie cancels to weight 0 and is deleted.
// Output keeps first-occurrence order of each lhs class; n_vars is unchanged,
// so variables may end up occurring in no equation.
inline LinearSystem apply_rule2(const LinearSystem& system) {
    struct ClassWeights {
        Weight w0 = 0, w1 = 0;
    };
    std::unordered_map<BitVec, std::size_t, BitVecHash> index;
    std::vector<ClassWeights> classes;
    std::vector<const BitVec*> order;
    for (const auto& eq : system.equations()) {
        auto [it, inserted] = index.try_emplace(eq.lhs, classes.size());
        if (inserted) {
            classes.emplace_back();
            order.push_back(&it->first);
        }
        ClassWeights& cw = classes[it->second];
        Weight& side = eq.rhs ? cw.w1 : cw.w0;
        side = checked_weight_add(side, eq.weight);
    }
    LinearSystem out(system.n_vars());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const ClassWeights& cw = classes[c];
        if (cw.w0 == cw.w1) continue;
        bool rhs = cw.w1 > cw.w0;
        Weight w = rhs ? cw.w1 - cw.w0 : cw.w0 - cw.w1;
        out.add_equation(WeightedEquation(*order[c], rhs, w));
    }
    return out;
}

struct Rule1Result {
    LinearSystem system;
    // kept_vars[new index] = original index.
    std::vector<std::uint32_t> kept_vars;
};

// Greedy column basis of the m x n coefficient matrix, scanning columns in
// increasing index and keeping each column that raises the rank. Columns are
// m-bit vectors; each kept column is stored reduced with its pivot row.
inline std::vector<std::uint32_t> independent_columns(const LinearSystem& system) {
    const std::size_t m = system.size();
    std::vector<std::uint32_t> kept;
    std::vector<BitVec> basis;           // reduced column vectors
    std::vector<std::size_t> pivot_row;  // leading row of each basis vector
    for (std::size_t col = 0; col < system.n_vars(); ++col) {
        BitVec v(m);
        for (std::size_t j = 0; j < m; ++j)
            if (system.equation(j).lhs.test(col)) v.set(j);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (v.test(pivot_row[b])) v ^= basis[b];
        if (v.none()) continue;
        pivot_row.push_back(v.find_first());
        basis.push_back(std::move(v));
        kept.push_back(static_cast<std::uint32_t>(col));
    }
    return kept;
}

inline std::size_t rank(const LinearSystem& system) {
    return independent_columns(system).size();
}

namespace detail {

// Restrict every lhs to `kept` and re-index densely. Equation order, rhs and
// weights are untouched. Every nonzero row keeps at least one kept column, so
// no lhs can become empty.
inline LinearSystem project_to(const LinearSystem& system,
                               const std::vector<std::uint32_t>& kept) {
    std::vector<std::size_t> new_index(system.n_vars(), SIZE_MAX);
    for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = i;
    LinearSystem out(kept.size());
    for (const auto& eq : system.equations()) {
        BitVec lhs(kept.size());
        eq.lhs.for_each_set([&](std::size_t i) {
            if (new_index[i] != SIZE_MAX) lhs.set(new_index[i]);
        });
        if (lhs.none())
            throw InternalError("column basis projection emptied an equation");
        out.add_equation(WeightedEquation(std::move(lhs), eq.rhs, eq.weight));
    }
    return out;
}

}  // namespace detail

// Rule 1 (rank reduction): delete all variables outside a column basis of the
// coefficient matrix, then re-index the kept variables densely.
inline Rule1Result apply_rule1(const LinearSystem& system) {
    std::vector<std::uint32_t> kept = independent_columns(system);
    return Rule1Result{detail::project_to(system, kept), std::move(kept)};
}

// Drop variables occurring in no equation (dense re-index, no projection).
inline Rule1Result compact_variables(const LinearSystem& system) {
    std::vector<std::size_t> counts = occurrence_counts(system);
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) kept.push_back(static_cast<std::uint32_t>(i));
    return Rule1Result{detail::project_to(system, kept), std::move(kept)};
}

inline bool has_distinct_lhs(const LinearSystem& system) {
    std::unordered_map<BitVec, bool, BitVecHash> seen;
    for (const auto& eq : system.equations())
        if (!seen.try_emplace(eq.lhs, true).second) return false;
    return true;
}

// True iff neither rule (nor dropping unused variable slots) changes the
// system: all lhs distinct and the coefficient matrix has full column rank.
// Implies n <= m and every variable occurs in some equation.
inline bool is_fully_reduced(const LinearSystem& system) {
    return has_distinct_lhs(system) && rank(system) == system.n_vars();
}

struct ReducedSystem {
    LinearSystem system;
    // var_map[reduced index] = index in the original system.
    std::vector<std::uint32_t> var_map;
};

// Rule 2, then alternate Rule 1 / Rule 2 until neither applies. The composed
// variable map lets witnesses found on the reduced system be lifted back.
inline ReducedSystem reduce_to_fixpoint(const LinearSystem& system) {
    std::vector<std::uint32_t> var_map(system.n_vars());
    std::iota(var_map.begin(), var_map.end(), 0);
    LinearSystem cur = apply_rule2(system);
    for (;;) {
        Rule1Result r1 = apply_rule1(cur);
        std::vector<std::uint32_t> composed(r1.kept_vars.size());
        for (std::size_t i = 0; i < r1.kept_vars.size(); ++i)
            composed[i] = var_map[r1.kept_vars[i]];
        var_map = std::move(composed);
        cur = apply_rule2(r1.system);
        if (is_fully_reduced(cur)) break;
    }
    return ReducedSystem{std::move(cur), std::move(var_map)};
}

}  // namespace maxlin
