#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maxlin/brute_force.hpp"

using namespace maxlin;
using test_helpers::Eq;
using test_helpers::make_system;

TEST_CASE("contradiction pair optimum is zero with the all-zero witness") {
    LinearSystem s = make_system(1, {{{0}, false, 1}, {{0}, true, 1}});
    BruteForceResult r = brute_force(s, 4);
    CHECK(r.opt_excess2 == 0);
    CHECK(r.witness == Assignment(1));
}

TEST_CASE("lexicographic tie-break prefers z1 = 0") {
    LinearSystem s = make_system(2, {{{0, 1}, true, 7}});
    BruteForceResult r = brute_force(s, 4);
    CHECK(r.opt_excess2 == 7);
    CHECK(r.witness.to_string() == "01");
}

TEST_CASE("unit triangle optimum is one") {
    // at most 2 of the 3 equations can hold (the lhs sum to zero, the rhs to
    // one), so the optimum excess2 is 2*2 - 3 = 1
    LinearSystem s =
        make_system(3, {{{0, 1}, false, 1}, {{1, 2}, false, 1}, {{0, 2}, true, 1}});
    BruteForceResult r = brute_force(s, 4);
    CHECK(r.opt_excess2 == 1);
    CHECK(r.witness == Assignment(3));  // lexicographically smallest achiever
    CHECK(evaluate(s, r.witness).excess2 == 1);
}

TEST_CASE("weighted triangle optimum is two") {
    LinearSystem s =
        make_system(3, {{{0, 1}, false, 2}, {{1, 2}, false, 1}, {{0, 2}, true, 1}});
    BruteForceResult r = brute_force(s, 4);
    CHECK(r.opt_excess2 == 2);
    CHECK(evaluate(s, r.witness).excess2 == 2);
}

TEST_CASE("budget violations are reported, never approximated") {
    LinearSystem s = make_system(3, {{{0, 1, 2}, false, 1}});
    CHECK_THROWS_AS(brute_force(s, 2), BudgetExceededError);
}

TEST_CASE("witness always attains the reported optimum") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        LinearSystem s = test_helpers::random_system(seed, 9);
        BruteForceResult r = brute_force(s, 12);
        CHECK(evaluate(s, r.witness).excess2 == r.opt_excess2);
        // no assignment does better: spot-check a few random ones
        SplitMix64 rng(seed);
        for (int t = 0; t < 6; ++t) {
            Assignment a = test_helpers::bits_from_counter(rng.next(), s.n_vars());
            CHECK(evaluate(s, a).excess2 <= r.opt_excess2);
        }
    }
}

TEST_CASE("empty systems have optimum zero") {
    BruteForceResult r = brute_force(LinearSystem(0), 4);
    CHECK(r.opt_excess2 == 0);
    CHECK(r.witness.size() == 0);
}
