#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "maxlin/bitvec.hpp"
#include "maxlin/errors.hpp"

namespace maxlin {

using Weight = std::uint64_t;

// Weights are unsigned 64-bit, but totals are kept within int64 range so that
// signed excess arithmetic (2*sat - W) cannot wrap.
inline constexpr Weight kMaxTotalWeight =
    static_cast<Weight>(std::numeric_limits<std::int64_t>::max());

inline Weight checked_weight_add(Weight a, Weight b) {
    if (b > kMaxTotalWeight - a)
        throw OverflowError("total weight exceeds " + std::to_string(kMaxTotalWeight));
    return a + b;
}

// One equation  sum_{i in lhs} z_i = rhs  with a positive integer weight.
struct WeightedEquation {
    BitVec lhs;
    bool rhs = false;
    Weight weight = 1;

    WeightedEquation() = default;
    WeightedEquation(BitVec lhs, bool rhs, Weight weight)
        : lhs(std::move(lhs)), rhs(rhs), weight(weight) {
        if (this->weight == 0) throw ContractError("equation weight must be positive");
        if (this->lhs.none()) throw ContractError("equation left-hand side must be nonempty");
    }

    std::size_t lhs_size() const { return lhs.count(); }

    friend bool operator==(const WeightedEquation& a, const WeightedEquation& b) {
        return a.rhs == b.rhs && a.weight == b.weight && a.lhs == b.lhs;
    }
};

// Ordered multiset of weighted equations over variables 0..n_vars-1.
class LinearSystem {
  public:
    LinearSystem() = default;
    explicit LinearSystem(std::size_t n_vars) : n_vars_(n_vars) {}

    std::size_t n_vars() const { return n_vars_; }
    std::size_t size() const { return equations_.size(); }
    bool empty() const { return equations_.empty(); }

    const std::vector<WeightedEquation>& equations() const { return equations_; }
    const WeightedEquation& equation(std::size_t j) const { return equations_[j]; }

    void add_equation(WeightedEquation eq) {
        if (eq.lhs.size() != n_vars_)
            throw DimensionError("equation width " + std::to_string(eq.lhs.size()) +
                                 " does not match system with " + std::to_string(n_vars_) +
                                 " variables");
        total_weight_ = checked_weight_add(total_weight_, eq.weight);
        equations_.push_back(std::move(eq));
    }

    // Variable indices are 0-based.
    void add_equation(std::initializer_list<std::uint32_t> vars, bool rhs, Weight weight) {
        BitVec lhs(n_vars_);
        for (std::uint32_t v : vars) {
            if (v >= n_vars_) throw DimensionError("variable index out of range");
            lhs.set(v);
        }
        add_equation(WeightedEquation(std::move(lhs), rhs, weight));
    }

    Weight total_weight() const { return total_weight_; }

    std::size_t max_equation_size() const {
        std::size_t r = 0;
        for (const auto& eq : equations_) r = std::max(r, eq.lhs_size());
        return r;
    }

    friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
        return a.n_vars_ == b.n_vars_ && a.equations_ == b.equations_;
    }

  private:
    std::size_t n_vars_ = 0;
    Weight total_weight_ = 0;
    std::vector<WeightedEquation> equations_;
};

// One bit per variable; evaluation requires length == system.n_vars().
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : bits_(n) {}

    std::size_t size() const { return bits_.size(); }
    bool get(std::size_t i) const { return bits_.test(i); }
    void set(std::size_t i, bool v) { bits_.assign(i, v); }
    const BitVec& bits() const { return bits_; }

    // "0101..." indexed by variable, lowest first.
    std::string to_string() const {
        std::string s(size(), '0');
        for (std::size_t i = 0; i < size(); ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    static Assignment from_string(const std::string& s) {
        Assignment a(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                a.set(i, true);
            else if (s[i] != '0')
                throw ContractError("assignment string must contain only 0 and 1");
        }
        return a;
    }

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.bits_ == b.bits_;
    }
    friend bool operator!=(const Assignment& a, const Assignment& b) { return !(a == b); }

  private:
    BitVec bits_;
};

struct Evaluation {
    Weight satisfied_weight = 0;
    // 2*satisfied_weight - W. The above-average question "weight >= (W+k)/2"
    // becomes "excess2 >= k" without fractions.
    std::int64_t excess2 = 0;
};

inline bool satisfies(const WeightedEquation& eq, const Assignment& a) {
    return parity_and(eq.lhs, a.bits()) == eq.rhs;
}

inline Evaluation evaluate(const LinearSystem& system, const Assignment& a) {
    if (a.size() != system.n_vars())
        throw DimensionError("assignment length " + std::to_string(a.size()) +
                             " does not match system with " +
                             std::to_string(system.n_vars()) + " variables");
    Weight sat = 0;
    for (const auto& eq : system.equations())
        if (satisfies(eq, a)) sat = checked_weight_add(sat, eq.weight);
    Weight unsat = system.total_weight() - sat;
    return Evaluation{sat, static_cast<std::int64_t>(sat) - static_cast<std::int64_t>(unsat)};
}

// Number of equations containing each variable (rho_i).
inline std::vector<std::size_t> occurrence_counts(const LinearSystem& system) {
    std::vector<std::size_t> counts(system.n_vars(), 0);
    for (const auto& eq : system.equations())
        eq.lhs.for_each_set([&](std::size_t i) { ++counts[i]; });
    return counts;
}

// rho = max_i rho_i; 0 for a system with no equations.
inline std::size_t max_occurrence(const LinearSystem& system) {
    std::size_t rho = 0;
    for (std::size_t c : occurrence_counts(system)) rho = std::max(rho, c);
    return rho;
}

}  // namespace maxlin
