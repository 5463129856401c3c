#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "maxlin/cnf.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

// Orders index sets by the integer value of their characteristic vector
// (compare the largest differing element). Gives the polynomial, and every
// linear system derived from it, a stable deterministic term order.
struct IndexSetLess {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    }
};

// Multilinear polynomial over {-1,+1} variables: a map from nonempty index
// sets I to nonzero integer coefficients c_I. Keys are sorted ascending.
class MultilinearPolynomial {
  public:
    using TermMap = std::map<std::vector<std::uint32_t>, std::int64_t, IndexSetLess>;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Accumulates; cancelled terms are removed so no zero coefficient is kept.
    void add_term(std::vector<std::uint32_t> index_set, std::int64_t coeff) {
        if (index_set.empty()) throw ContractError("polynomial terms must be nonempty sets");
        auto [it, inserted] = terms_.try_emplace(std::move(index_set), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [idx, c] : terms_) d = std::max(d, idx.size());
        return d;
    }

    // Distinct variables appearing in some term, ascending.
    std::vector<std::uint32_t> variables() const {
        std::vector<std::uint32_t> vars;
        for (const auto& [idx, c] : terms_) vars.insert(vars.end(), idx.begin(), idx.end());
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) =
        default;

  private:
    TermMap terms_;
};

// Expansion of  sum_j (1 - prod_{i in C_j} (1 + e_i x_i))  with e_i = +1 for a
// positive literal and -1 for a negated one. Per clause each nonempty subset T
// contributes -prod_{i in T} e_i; the empty subset cancels against the leading
// 1, so no constant term ever appears. Terms cancel across clauses.
inline MultilinearPolynomial formula_polynomial(const CnfFormula& f) {
    MultilinearPolynomial poly;
    std::vector<std::uint32_t> index_set;
    for (const Clause& clause : f.clauses()) {
        const std::size_t r = clause.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
            index_set.clear();
            int negations = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (!((mask >> i) & 1u)) continue;
                index_set.push_back(clause[i].var);  // clause is var-sorted
                if (!clause[i].positive) ++negations;
            }
            const std::int64_t sign = (negations & 1) ? -1 : 1;
            poly.add_term(index_set, -sign);
        }
    }
    return poly;
}

// Value of the polynomial at a point with entries in {-1,+1}.
inline std::int64_t evaluate_polynomial(const MultilinearPolynomial& p,
                                        const std::vector<int>& x) {
    for (int v : x)
        if (v != 1 && v != -1) throw ContractError("polynomial points must be +1 or -1");
    std::int64_t total = 0;
    for (const auto& [idx, coeff] : p.terms()) {
        bool negative = false;
        for (std::uint32_t i : idx) {
            if (i >= x.size()) throw DimensionError("point is shorter than the polynomial");
            if (x[i] == -1) negative = !negative;
        }
        total += negative ? -coeff : coeff;
    }
    return total;
}

struct PolySystem {
    LinearSystem system;
    // vars[system index] = polynomial variable index; variables appearing in
    // no term are dropped, so the system may have fewer variables.
    std::vector<std::uint32_t> vars;
};

// One equation per term: sum_{i in I} z_i = 0 if c_I > 0 else 1, with weight
// |c_I|. Under x_i = (-1)^{z_i} each equation contributes +|c_I| to excess2
// exactly when the term contributes +|c_I| to the polynomial, so
// excess2(system, z) == X(x) pointwise.
inline PolySystem poly_to_system(const MultilinearPolynomial& p) {
    PolySystem out;
    out.vars = p.variables();
    std::vector<std::size_t> dense(out.vars.empty() ? 0 : out.vars.back() + 1, 0);
    for (std::size_t i = 0; i < out.vars.size(); ++i) dense[out.vars[i]] = i;

    out.system = LinearSystem(out.vars.size());
    for (const auto& [idx, coeff] : p.terms()) {
        BitVec lhs(out.vars.size());
        for (std::uint32_t v : idx) lhs.set(dense[v]);
        const bool rhs = coeff < 0;
        const Weight w = static_cast<Weight>(coeff < 0 ? -coeff : coeff);
        out.system.add_equation(WeightedEquation(std::move(lhs), rhs, w));
    }
    return out;
}

}  // namespace maxlin
