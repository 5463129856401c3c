#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maxlin/brute_force.hpp"
#include "maxlin/reduce.hpp"

using namespace maxlin;
using test_helpers::Eq;
using test_helpers::make_system;

TEST_CASE("merge rule keeps the majority rhs with the weight difference") {
    LinearSystem s = make_system(1, {{{0}, false, 3}, {{0}, true, 1}});
    LinearSystem r = apply_rule2(s);
    CHECK(r == make_system(1, {{{0}, false, 2}}));
}

TEST_CASE("merge rule adds weights of agreeing equations") {
    LinearSystem s = make_system(2, {{{0, 1}, false, 2}, {{0, 1}, false, 5}});
    CHECK(apply_rule2(s) == make_system(2, {{{0, 1}, false, 7}}));
}

TEST_CASE("merge rule deletes an exact cancellation") {
    LinearSystem s = make_system(1, {{{0}, false, 4}, {{0}, true, 4}});
    LinearSystem r = apply_rule2(s);
    CHECK(r.empty());
    CHECK(r.n_vars() == 1);  // variable slots stay
}

TEST_CASE("merge rule is idempotent and never raises the total weight") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        LinearSystem s = test_helpers::random_system(seed);
        LinearSystem once = apply_rule2(s);
        CHECK(once.total_weight() <= s.total_weight());
        CHECK(apply_rule2(once) == once);
        CHECK(has_distinct_lhs(once));
    }
}

TEST_CASE("rank rule collapses duplicate columns") {
    LinearSystem s = make_system(2, {{{0, 1}, false, 1}, {{0, 1}, true, 2}});
    Rule1Result r = apply_rule1(s);
    CHECK(r.system == make_system(1, {{{0}, false, 1}, {{0}, true, 2}}));
    CHECK(r.kept_vars == std::vector<std::uint32_t>{0});
}

TEST_CASE("rank rule keeps a full-rank system unchanged") {
    LinearSystem s = make_system(2, {{{0}, false, 1}, {{1}, true, 1}});
    Rule1Result r = apply_rule1(s);
    CHECK(r.system == s);
    CHECK(r.kept_vars == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("rank rule projects a single wide equation to one variable") {
    LinearSystem s = make_system(3, {{{0, 1, 2}, true, 3}});
    Rule1Result r = apply_rule1(s);
    CHECK(r.system == make_system(1, {{{0}, true, 3}}));
    CHECK(r.kept_vars == std::vector<std::uint32_t>{0});
    // the optimum excess is untouched: 3 before, 3 after
    CHECK(brute_force(s, 12).opt_excess2 == 3);
    CHECK(brute_force(r.system, 12).opt_excess2 == 3);
}

TEST_CASE("both rules preserve the brute-force optimum") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        LinearSystem s = test_helpers::random_system(seed, 9, 14);
        std::int64_t opt = brute_force(s, 12).opt_excess2;
        CHECK(brute_force(apply_rule2(s), 12).opt_excess2 == opt);
        Rule1Result r1 = apply_rule1(s);
        CHECK(brute_force(r1.system, 12).opt_excess2 == opt);
        CHECK(brute_force(reduce_to_fixpoint(s).system, 12).opt_excess2 == opt);
    }
}

TEST_CASE("rank rule output has as many variables as its rank, at most m") {
    for (std::uint64_t seed = 300; seed < 360; ++seed) {
        LinearSystem s = test_helpers::random_system(seed);
        Rule1Result r = apply_rule1(s);
        CHECK(r.system.n_vars() == rank(s));
        CHECK(r.system.n_vars() == rank(r.system));
        CHECK(r.system.n_vars() <= r.system.size());
    }
}

TEST_CASE("is_fully_reduced matches the examples") {
    CHECK(is_fully_reduced(make_system(2, {{{0}, false, 1}, {{1}, true, 1}})));
    CHECK_FALSE(is_fully_reduced(make_system(1, {{{0}, false, 1}, {{0}, true, 1}})));
    CHECK_FALSE(is_fully_reduced(make_system(2, {{{0, 1}, false, 1}, {{0, 1}, true, 2}})));
    // dangling variable slot
    CHECK_FALSE(is_fully_reduced(make_system(2, {{{0}, false, 1}})));
    CHECK(is_fully_reduced(LinearSystem(0)));
    CHECK_FALSE(is_fully_reduced(LinearSystem(2)));
}

TEST_CASE("fixpoint reduction always lands on a fully reduced system") {
    for (std::uint64_t seed = 400; seed < 480; ++seed) {
        LinearSystem s = test_helpers::random_system(seed);
        ReducedSystem r = reduce_to_fixpoint(s);
        CHECK(is_fully_reduced(r.system));
        CHECK(r.var_map.size() == r.system.n_vars());
        for (std::uint32_t orig : r.var_map) CHECK(orig < s.n_vars());
    }
}

TEST_CASE("compacting drops only unused variable slots") {
    LinearSystem s = make_system(4, {{{1}, false, 2}, {{3, 1}, true, 1}});
    Rule1Result c = compact_variables(s);
    CHECK(c.kept_vars == std::vector<std::uint32_t>{1, 3});
    CHECK(c.system == make_system(2, {{{0}, false, 2}, {{1, 0}, true, 1}}));
}
