#include "doctest.h"
#include "test_util.hpp"
#include "twistalg/parse.hpp"

using namespace twistalg;
using testutil::rat;

TEST_CASE("parse examples") {
    NcPoly ab_ba;
    ab_ba.add_term(Word("AB"), Scalar(1L));
    ab_ba.add_term(Word("BA"), Scalar(-1L));
    CHECK(parse("[A,B]") == ab_ba);

    NcPoly expect;
    expect.add_term(Word("AA"), Scalar::sym_m());
    expect.add_term(Word(), -(Scalar::sym_m() - Scalar(1L)).inv());
    CHECK(parse("m*A^2 - (1/(m-1))*I") == expect);

    CHECK(parse("I").as_scalar().value() == Scalar(1L));
    CHECK(parse("2/3").as_scalar().value() == Scalar(rat(2, 3)));
    CHECK(parse("m^-2").as_scalar().value() == TwistParams::symbolic().m_power(-2));
    CHECK(parse("0").is_zero());
}

TEST_CASE("parse error positions") {
    try {
        parse("A*(B");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse("A*"), ParseError);
    CHECK_THROWS_AS(parse("[A B]"), ParseError);
    CHECK_THROWS_AS(parse("x"), ParseError);
    CHECK_THROWS_AS(parse("A/B"), ParseError);   // non-scalar divisor
    CHECK_THROWS_AS(parse("C^-1"), ParseError);  // non-scalar base
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("juxtaposition and sugar") {
    CHECK(parse("2A") == parse("2*A"));
    CHECK(parse("A B") == parse("A*B"));
    CHECK(parse("m b A") == parse("m*b*A"));
    CHECK(parse("(A+B)(A-B)") == parse("(A+B)*(A-B)"));
    CHECK(parse("[A,B]^2") == parse("[A,B]*[A,B]"));
    CHECK(parse("-A") == -parse("A"));
    CHECK(parse("A^0").as_scalar().value() == Scalar(1L));
}

TEST_CASE("render examples") {
    CHECK(NcPoly().str() == "0");
    NcPoly ab_ba;
    ab_ba.add_term(Word("AB"), Scalar(1L));
    ab_ba.add_term(Word("BA"), Scalar(-1L));
    CHECK(ab_ba.str() == "A*B - B*A");
}

TEST_CASE("round trips on generated corpus") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 1000; ++t) {
        const NcPoly p = testutil::random_poly(rng, 6, 4, /*symbolic_coeffs=*/true);
        const std::string s = p.str();
        CAPTURE(s);
        const NcPoly q = parse(s);
        CHECK(q == p);
        // Canonical strings are fixpoints of parse-then-render.
        CHECK(q.str() == s);
    }
}
