#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "maxlin/io.hpp"

using namespace maxlin;
using test_helpers::Eq;
using test_helpers::make_system;

TEST_CASE("parse_lin reads the documented examples") {
    LinearSystem s = parse_lin("p lin 2 1\n3 0 1 2 0\n");
    CHECK(s == make_system(2, {{{0, 1}, false, 3}}));

    LinearSystem t = parse_lin("c note\np lin 1 1\n1 1 1 0\n");
    CHECK(t == make_system(1, {{{0}, true, 1}}));
}

TEST_CASE("parse_lin diagnostics carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_lin(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t{0};
    };
    CHECK(line_of("p lin x 1\n") == 1);                    // malformed header
    CHECK(line_of("p lin 1 1\n0 0 1 0\n") == 2);           // nonpositive weight
    CHECK(line_of("p lin 1 1\n1 2 1 0\n") == 2);           // bad rhs
    CHECK(line_of("p lin 1 1\n1 0 2 0\n") == 2);           // index out of range
    CHECK(line_of("p lin 2 1\n1 0 1 1 0\n") == 2);         // duplicate variable
    CHECK(line_of("p lin 1 1\n1 0 1\n") == 2);             // missing terminator
    CHECK(line_of("p lin 2 1\n1 0 1 0 2\n") == 2);         // trailing tokens
    CHECK(line_of("p lin 1 1\n1 0 0\n") == 2);             // empty lhs
    CHECK(line_of("p lin 1 2\n1 0 1 0\n") == 2);           // record count mismatch
    CHECK(line_of("c only a comment\n") == 1);             // missing header
    CHECK(line_of("p lin 1 1\n1 0 1 0\n1 1 1 0\n") == 3);  // extra record
}

TEST_CASE("lin serialization round-trips") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        LinearSystem s = test_helpers::random_system(seed);
        CHECK(parse_lin(serialize_lin(s)) == s);
    }
    // comments and blank lines are ignored on re-parse
    LinearSystem s = make_system(2, {{{0, 1}, true, 4}});
    CHECK(parse_lin("c x\n\n" + serialize_lin(s, {"generated", "for a test"})) == s);
}

TEST_CASE("parse_dimacs reads the documented examples") {
    CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n");
    CHECK(f.n_vars() == 2);
    CHECK(f.r() == 2);
    REQUIRE(f.size() == 1);
    CHECK(f.clauses()[0] == Clause{Literal{0, true}, Literal{1, true}});

    CnfFormula g = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n");
    REQUIRE(g.size() == 2);
    CHECK(g.clauses()[1] == Clause{Literal{0, false}, Literal{1, true}});
}

TEST_CASE("parse_dimacs rejects the documented malformations") {
    auto line_of = [](const std::string& text) {
        try {
            parse_dimacs(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t{0};
    };
    CHECK(line_of("p cnf 2 1\n1 -1 0\n") == 2);            // tautology
    CHECK(line_of("p cnf 2 1\n1 1 0\n") == 2);             // repeated variable
    CHECK(line_of("p cnf 3 2\n1 2 0\n1 2 3 0\n") == 3);    // width mismatch
    CHECK(line_of("p cnf 2 1\n1 2\n") == 2);               // unterminated clause
    CHECK(line_of("p cnf 2 1\n1 3 0\n") == 2);             // literal out of range
    CHECK(line_of("p cnf 2 1\n1 0\n") == 2);               // width below 2
    CHECK(line_of("nonsense\n") == 1);                     // bad header
}

TEST_CASE("dimacs clauses may span lines") {
    CnfFormula f = parse_dimacs("p cnf 3 2\n1 2\n3 0 -1\n-2 3 0\n");
    REQUIRE(f.size() == 2);
    CHECK(f.r() == 3);
}

TEST_CASE("an empty dimacs formula parses when the width can default") {
    CnfFormula f = parse_dimacs("p cnf 4 0\n");
    CHECK(f.size() == 0);
    CHECK(f.n_vars() == 4);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 0\n"), ParseError);
}

TEST_CASE("dimacs serialization round-trips") {
    CnfGenConfig cfg;
    cfg.n = 6;
    cfg.m = 9;
    cfg.r = 3;
    cfg.seed = 11;
    CnfFormula f = gen_cnf(cfg);
    CHECK(parse_dimacs(serialize_dimacs(f)) == f);
}

TEST_CASE("result documents serialize with stable fields and round-trip") {
    Verdict yes;
    yes.yes = true;
    yes.witness = Assignment::from_string("0101");
    yes.decided_by = DecidedBy::MarkingRun;
    yes.stats = VerdictStats{2, 4, 0};
    ResultDocument doc{yes, 2, 0.125};
    std::string json = serialize_result(doc, ResultFormat::Json);
    CHECK(json ==
          "{\"answer\":\"yes\",\"k\":2,\"witness\":\"0101\",\"strategy\":\"algorithm_a\","
          "\"marks\":2,\"equations_deleted\":4,\"residual_size\":0,\"time_ms\":0.125}\n");
    CHECK(parse_result(json) == doc);

    Verdict no;
    no.yes = false;
    no.certificate_excess2 = -3;
    no.decided_by = DecidedBy::BruteForce;
    ResultDocument ndoc{no, 5, 1.5};
    std::string njson = serialize_result(ndoc, ResultFormat::Json);
    CHECK(njson.find("\"excess2_optimum\":-3") != std::string::npos);
    CHECK(njson.find("witness") == std::string::npos);
    CHECK(parse_result(njson) == ndoc);

    std::string text = serialize_result(ndoc, ResultFormat::Text);
    CHECK(text.find("answer: no") != std::string::npos);
    CHECK(text.find("excess2_optimum: -3") != std::string::npos);
}

TEST_CASE("malformed result json is rejected") {
    CHECK_THROWS_AS(parse_result("{"), ParseError);
    CHECK_THROWS_AS(parse_result("{\"answer\":\"yes\"}"), ParseError);
}
