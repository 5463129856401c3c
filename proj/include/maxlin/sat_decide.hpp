#pragma once

#include <cstdint>
#include <vector>

#include "maxlin/cnf.hpp"
#include "maxlin/decide.hpp"
#include "maxlin/polynomial.hpp"

namespace maxlin {

namespace detail {

// Truth assignment over the formula's variables from a z-assignment over the
// system's (dense) variables; variables absent from every term stay false.
inline Assignment truth_from_system_assignment(const PolySystem& ps, const Assignment& z,
                                               std::size_t n_formula_vars) {
    Assignment truth(n_formula_vars);
    for (std::size_t i = 0; i < ps.vars.size(); ++i) truth.set(ps.vars[i], z.get(i));
    return truth;
}

// Exact integer form of "sat_count >= E + k*2^-r": both sides times 2^r.
inline void verify_sat_witness(const CnfFormula& f, const Assignment& truth,
                               std::int64_t k) {
    const std::int64_t m = static_cast<std::int64_t>(f.size());
    if (f.size() > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max() >>
                                            f.r()))
        throw OverflowError("clause count too large for exact threshold arithmetic");
    const std::int64_t scale = std::int64_t{1} << f.r();
    const std::int64_t sat = static_cast<std::int64_t>(sat_count(f, truth));
    if (scale * sat < (scale - 1) * m + k)
        throw InternalError("sat witness failed re-verification against the formula");
}

}  // namespace detail

// Decide whether some truth assignment satisfies at least E + k*2^-r clauses,
// E = m(1 - 2^-r). The formula is expanded into the polynomial X (satisfied
// clauses == E + X/2^r pointwise) and X into a weighted linear system with
// excess2 == X. If the system keeps more than 2^k * r variables the marking
// loop is guaranteed to certify yes and yields a witness; otherwise X is
// maximized exhaustively over the system's variables. Yes verdicts carry a
// truth assignment re-verified against the formula itself; no verdicts carry
// max X as the certificate.
inline Verdict decide_max_r_sat_aa(const CnfFormula& f, std::size_t k,
                                   std::size_t var_budget = kDefaultVarBudget) {
    const MultilinearPolynomial poly = formula_polynomial(f);
    const PolySystem ps = poly_to_system(poly);
    const std::size_t n_prime = ps.system.n_vars();

    if (k == 0) {
        Assignment z = half_weight_greedy(ps.system);
        Assignment truth = detail::truth_from_system_assignment(ps, z, f.n_vars());
        detail::verify_sat_witness(f, truth, 0);
        return Verdict{true, std::move(truth), std::nullopt, DecidedBy::ZeroExcessGreedy, {}};
    }

    const bool wide = k < 63 && f.r() <= std::numeric_limits<std::uint64_t>::max() >> k &&
                      n_prime > (std::uint64_t{1} << k) * f.r();
    if (wide) {
        // One equation per distinct term, so lhs are distinct by construction.
        MarkTrace trace = run_marking(ps.system, k, PivotRule::MinOccurrence);
        VerdictStats stats{trace.marks.size(), trace.equations_deleted(),
                           trace.residual.size()};
        if (trace.marks.size() != k)
            throw InternalError("marking fell short of k despite the width guarantee");
        Assignment z = extend_through_marks(trace, half_weight_greedy(trace.residual));
        Assignment truth = detail::truth_from_system_assignment(ps, z, f.n_vars());
        detail::verify_sat_witness(f, truth, static_cast<std::int64_t>(k));
        return Verdict{true, std::move(truth), std::nullopt, DecidedBy::MarkingRun, stats};
    }

    BruteForceResult bf = brute_force(ps.system, var_budget);  // max X over 2^n' points
    if (bf.opt_excess2 >= static_cast<std::int64_t>(k)) {
        Assignment truth = detail::truth_from_system_assignment(ps, bf.witness, f.n_vars());
        detail::verify_sat_witness(f, truth, static_cast<std::int64_t>(k));
        return Verdict{true, std::move(truth), std::nullopt, DecidedBy::BruteForce, {}};
    }
    return Verdict{false, std::nullopt, bf.opt_excess2, DecidedBy::BruteForce, {}};
}

}  // namespace maxlin
