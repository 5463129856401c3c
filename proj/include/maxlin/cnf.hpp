#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "maxlin/errors.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

struct Literal {
    std::uint32_t var = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

// Multiset of m clauses of uniform width r >= 2, each over r distinct
// variables. Tautological clauses and repeated variables are rejected: the
// clause expansion below assumes every clause factor is over distinct
// variables, and x_i^2 = 1 would smuggle in a constant term.
class CnfFormula {
  public:
    CnfFormula() = default;
    CnfFormula(std::size_t n_vars, std::size_t r) : n_vars_(n_vars), r_(r) {
        if (r_ < 2) throw ContractError("clause width must be at least 2");
        if (r_ > n_vars_) throw ContractError("clause width exceeds variable count");
        if (r_ > 62) throw ContractError("clause width beyond supported range");
    }

    std::size_t n_vars() const { return n_vars_; }
    std::size_t r() const { return r_; }
    std::size_t size() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    void add_clause(Clause clause) {
        if (clause.size() != r_)
            throw ContractError("clause has " + std::to_string(clause.size()) +
                                " literals, expected " + std::to_string(r_));
        std::sort(clause.begin(), clause.end(),
                  [](const Literal& a, const Literal& b) { return a.var < b.var; });
        for (std::size_t i = 0; i < clause.size(); ++i) {
            if (clause[i].var >= n_vars_)
                throw ContractError("literal variable index out of range");
            if (i > 0 && clause[i].var == clause[i - 1].var) {
                if (clause[i].positive != clause[i - 1].positive)
                    throw ContractError("tautological clause: variable and its negation");
                throw ContractError("clause repeats a variable");
            }
        }
        clauses_.push_back(std::move(clause));
    }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

  private:
    std::size_t n_vars_ = 0;
    std::size_t r_ = 2;
    std::vector<Clause> clauses_;
};

// Number of clauses with at least one true literal. Truth bit 1 means true.
inline std::size_t sat_count(const CnfFormula& f, const Assignment& truth) {
    if (truth.size() != f.n_vars())
        throw DimensionError("truth assignment length does not match formula");
    std::size_t sat = 0;
    for (const Clause& c : f.clauses()) {
        for (const Literal& lit : c) {
            if (truth.get(lit.var) == lit.positive) {
                ++sat;
                break;
            }
        }
    }
    return sat;
}

}  // namespace maxlin
