#include <catch2/catch_amalgamated.hpp>

#include "fourfold/parser.hpp"
#include "helpers.hpp"

using namespace fourfold;

TEST_CASE("basic grammar forms") {
    ManifoldExpr a = parse_expr("Z0 # CP2 # 4 CP2bar");
    std::vector<ManifoldExpr> parts{ManifoldExpr::z0(), ManifoldExpr::cp2()};
    for (int i = 0; i < 4; ++i) parts.push_back(ManifoldExpr::cp2bar());
    CHECK(a == ManifoldExpr::conn_sum(parts));

    CHECK(parse_expr("W(3,1) # 2 CP2bar") ==
          ManifoldExpr::conn_sum({ManifoldExpr::w_family(3, 1), ManifoldExpr::cp2bar(),
                                  ManifoldExpr::cp2bar()}));
    CHECK(parse_expr("E(3)") == ManifoldExpr::elliptic(3));
    CHECK(parse_expr("  S2xS2  ") == ManifoldExpr::s2xs2());
    CHECK(parse_expr("Z0#CP2#4CP2bar") == a);
}

TEST_CASE("cover expressions evaluate eagerly") {
    CHECK(parse_expr("cover(W(2,1))") == ManifoldExpr::x_family(2, 1));
    CHECK(parse_expr("cover(G(3))") == ManifoldExpr::d_family(3));
    std::vector<ManifoldExpr> expected{ManifoldExpr::s2xs2()};
    for (int i = 0; i < 8; ++i) expected.push_back(ManifoldExpr::cp2bar());
    CHECK(parse_expr("cover(Z0 # 4 CP2bar)") == ManifoldExpr::conn_sum(expected));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expr("E(");
        FAIL("no error raised");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.expected() == "an integer");
    }
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("Z0 Z0"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z0 # "), ParseError);
    CHECK_THROWS_AS(parse_expr("Q5"), ParseError);
    CHECK_THROWS_AS(parse_expr("X(1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("cover(Z0"), ParseError);
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_expr("E(0)"), ParseError);
    CHECK_THROWS_AS(parse_expr("D(1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("W(0,2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("0 CP2"), ParseError);
    CHECK_THROWS_AS(parse_expr("cover(E(2))"), ParseError);  // simply connected
}

TEST_CASE("pretty printing groups repeated summands") {
    CHECK(pretty_print(parse_expr("Z0 # CP2 # 4 CP2bar")) == "Z0 # CP2 # 4 CP2bar");
    CHECK(pretty_print(parse_expr("1 K3")) == "K3");
    CHECK(pretty_print(ManifoldExpr::w_family(3, 4)) == "W(3,4)");
}

TEST_CASE("parse then print round-trips on random trees") {
    for (int trial = 0; trial < 500; ++trial) {
        ManifoldExpr t = testutil::random_grammar_expr();
        REQUIRE(parse_expr(pretty_print(t)) == t);
    }
}

TEST_CASE("functional display forms for programmatic nodes") {
    ManifoldExpr q = ManifoldExpr::free_quotient(
        ManifoldExpr::blowup(ManifoldExpr::elliptic(2), 4), "iota", false);
    std::string s = pretty_print(q);
    CHECK(s.find("quotient") != std::string::npos);
    CHECK(s.find("blowup") != std::string::npos);
}
