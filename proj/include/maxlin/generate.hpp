#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "maxlin/cnf.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

// SplitMix64. The generator, its seeding, and the modulo bounding below are
// part of the instance format contract: a config must produce bit-identical
// instances on every platform, so nothing from <random> is used.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound >= 1.
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

    bool bit() { return next() & 1u; }

  private:
    std::uint64_t state_;
};

struct LinGenConfig {
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t r_max = 1;
    Weight weight_max = 1;
    std::uint64_t seed = 0;
    bool reduce = false;  // post-apply both rules to fixpoint

    void validate() const {
        if (n < 1) throw ContractError("generator needs at least one variable");
        if (m < 1) throw ContractError("generator needs at least one equation");
        if (r_max < 1 || r_max > n)
            throw ContractError("equation size bound must be in 1..n");
        if (weight_max < 1) throw ContractError("weight bound must be at least 1");
    }
};

struct CnfGenConfig {
    std::size_t n = 2;
    std::size_t m = 1;
    std::size_t r = 2;
    std::uint64_t seed = 0;

    void validate() const {
        if (m < 1) throw ContractError("generator needs at least one clause");
        if (r < 2) throw ContractError("clause width must be at least 2");
        if (r > n) throw ContractError("clause width exceeds variable count");
    }
};

namespace detail {

// First `count` entries of a partial Fisher-Yates shuffle of 0..n-1.
// Draw order is part of the determinism contract.
inline std::vector<std::uint32_t> sample_distinct(SplitMix64& rng, std::size_t n,
                                                  std::size_t count) {
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + rng.bounded(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace detail

// m equations; per equation the draws are: size in 1..r_max, the variable
// sample, the rhs bit, the weight in 1..weight_max.
inline LinearSystem gen_lin(const LinGenConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    LinearSystem system(cfg.n);
    for (std::size_t j = 0; j < cfg.m; ++j) {
        std::size_t size = 1 + rng.bounded(cfg.r_max);
        BitVec lhs(cfg.n);
        for (std::uint32_t v : detail::sample_distinct(rng, cfg.n, size)) lhs.set(v);
        bool rhs = rng.bit();
        Weight w = 1 + rng.bounded(cfg.weight_max);
        system.add_equation(WeightedEquation(std::move(lhs), rhs, w));
    }
    if (cfg.reduce) return reduce_to_fixpoint(system).system;
    return system;
}

// m clauses of r distinct variables; per clause the variable sample is drawn
// first, then one sign bit per literal in ascending variable order. Distinct
// variables rule out tautologies by construction.
inline CnfFormula gen_cnf(const CnfGenConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    CnfFormula f(cfg.n, cfg.r);
    for (std::size_t j = 0; j < cfg.m; ++j) {
        std::vector<std::uint32_t> vars = detail::sample_distinct(rng, cfg.n, cfg.r);
        std::sort(vars.begin(), vars.end());
        Clause clause;
        clause.reserve(cfg.r);
        for (std::uint32_t v : vars) clause.push_back(Literal{v, rng.bit()});
        f.add_clause(std::move(clause));
    }
    return f;
}

}  // namespace maxlin
