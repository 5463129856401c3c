#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "maxlin/generate.hpp"
#include "maxlin/system.hpp"

namespace test_helpers {

struct Eq {
    std::vector<std::uint32_t> vars;  // 0-based
    bool rhs;
    maxlin::Weight weight;
};

inline maxlin::LinearSystem make_system(std::size_t n, const std::vector<Eq>& eqs) {
    maxlin::LinearSystem s(n);
    for (const Eq& e : eqs) {
        maxlin::BitVec lhs(n);
        for (auto v : e.vars) lhs.set(v);
        s.add_equation(maxlin::WeightedEquation(std::move(lhs), e.rhs, e.weight));
    }
    return s;
}

// Independent of the BitVec evaluation path: plain index lists, no words.
inline std::int64_t naive_excess2(std::size_t n, const std::vector<Eq>& eqs,
                                  const std::vector<int>& assignment) {
    (void)n;
    std::int64_t excess = 0;
    for (const Eq& e : eqs) {
        int parity = 0;
        for (auto v : e.vars) parity ^= assignment[v];
        excess += (parity == (e.rhs ? 1 : 0)) ? static_cast<std::int64_t>(e.weight)
                                              : -static_cast<std::int64_t>(e.weight);
    }
    return excess;
}

inline maxlin::Assignment bits_from_counter(std::uint64_t c, std::size_t n) {
    maxlin::Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, (c >> i) & 1u);
    return a;
}

// Small random systems for property tests.
inline maxlin::LinearSystem random_system(std::uint64_t seed, std::size_t max_n = 10,
                                          std::size_t max_m = 20,
                                          maxlin::Weight max_w = 8) {
    maxlin::SplitMix64 rng(seed ^ 0x5eedULL);
    maxlin::LinGenConfig cfg;
    cfg.n = 1 + rng.bounded(max_n);
    cfg.m = 1 + rng.bounded(max_m);
    cfg.r_max = 1 + rng.bounded(std::min<std::size_t>(cfg.n, 4));
    cfg.weight_max = 1 + rng.bounded(max_w);
    cfg.seed = seed;
    return maxlin::gen_lin(cfg);
}

class ScratchDir {
  public:
    explicit ScratchDir(const std::string& tag) {
        dir_ = std::filesystem::temp_directory_path() / ("maxlin_" + tag);
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    ~ScratchDir() { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) const {
        auto path = dir_ / name;
        std::ofstream out(path);
        out << content;
        return path.string();
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

  private:
    std::filesystem::path dir_;
};

}  // namespace test_helpers
