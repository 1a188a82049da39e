#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "twistalg/parse.hpp"
#include "twistalg/rewrite.hpp"

using namespace twistalg;
using testutil::rat;

namespace {

const Rewriter& sym_rw() {
    static Rewriter rw{TwistParams::symbolic()};
    return rw;
}

void enumerate_words(int max_len, const std::function<void(const Word&)>& visit) {
    std::vector<std::string> level = {""};
    visit(Word(""));
    for (int l = 1; l <= max_len; ++l) {
        std::vector<std::string> next;
        for (const auto& s : level)
            for (char c : {'A', 'B', 'C'}) {
                next.push_back(s + c);
                visit(Word(s + c));
            }
        level = std::move(next);
    }
}

// Exhaustive reducer: explores every redex choice and records every
// reachable irreducible polynomial.
void explore(const Rewriter& rw, const NcPoly& p, std::set<std::string>& seen,
             std::set<std::string>& results) {
    if (!seen.insert(p.str()).second) return;
    bool reducible = false;
    for (const auto& [w, c] : p.terms()) {
        for (const Redex& r : rw.find_all_redexes(w)) {
            reducible = true;
            NcPoly next = rw.reduce_at(p, w.prefix(r.pos), r.rule,
                                       w.suffix_from(r.pos + rw.rule_lhs(r.rule).size()));
            explore(rw, next, seen, results);
        }
    }
    if (!reducible) results.insert(p.str());
}

}  // namespace

TEST_CASE("rule right-hand sides decrease the measure") {
    const Rewriter& rw = sym_rw();
    std::vector<RuleRef> rules = {{RuleName::AB, 1}, {RuleName::AC, 1}, {RuleName::BA, 1}, {RuleName::CB, 1}};
    for (int k = 1; k <= 10; ++k) rules.push_back({RuleName::BCkA, k});
    for (const RuleRef& r : rules) {
        const Measure lhs = measure(rw.rule_lhs(r));
        const NcPoly rhs = rw.rule_rhs(r);
        for (const auto& [w, c] : rhs.terms()) CHECK(measure(w) < lhs);
    }
}

TEST_CASE("leftmost redex") {
    const Rewriter& rw = sym_rw();
    auto r1 = rw.find_leftmost_redex(Word("ABA"));
    REQUIRE(r1.has_value());
    CHECK(r1->pos == 0);
    CHECK(r1->rule == RuleRef{RuleName::AB, 1});

    auto r2 = rw.find_leftmost_redex(Word("BCCA"));
    REQUIRE(r2.has_value());
    CHECK(r2->pos == 0);
    CHECK(r2->rule == RuleRef{RuleName::BCkA, 2});

    CHECK_FALSE(rw.find_leftmost_redex(Word("CAA")).has_value());
    CHECK_FALSE(rw.find_leftmost_redex(Word()).has_value());

    // B followed by C's without a closing A is not a match.
    auto r3 = rw.find_leftmost_redex(Word("BCCB"));
    REQUIRE(r3.has_value());
    CHECK(r3->pos == 2);
    CHECK(r3->rule == RuleRef{RuleName::CB, 1});
}

TEST_CASE("at most one rule matches per position") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const Word w = testutil::random_word(rng, 8);
        std::set<size_t> positions;
        for (const Redex& r : rw.find_all_redexes(w)) CHECK(positions.insert(r.pos).second);
    }
}

TEST_CASE("reduce_at is the single-word reduction") {
    const Rewriter& rw = sym_rw();
    // AC -> m*CA
    CHECK(rw.reduce_at(NcPoly::term(Word("AC")), Word(), {RuleName::AC, 1}, Word()) ==
          NcPoly::term(Word("CA"), Scalar::sym_m()));
    // The reduction fixes everything except its own word.
    const NcPoly a = NcPoly::letter(Letter::A);
    CHECK(rw.reduce_at(a, Word(), {RuleName::AC, 1}, Word()) == a);
    // Only the occurrence with the stated context is rewritten.
    CHECK(rw.reduce_at(NcPoly::term(Word("ACC")), Word(), {RuleName::AC, 1}, Word("C")) ==
          NcPoly::term(Word("CAC"), Scalar::sym_m()));
    // Context on the left.
    CHECK(rw.reduce_at(NcPoly::term(Word("ACC")), Word("A"), {RuleName::CB, 1}, Word()) ==
          NcPoly::term(Word("ACC")));
}

TEST_CASE("normal form matches the defining relations") {
    const Rewriter& rw = sym_rw();
    CHECK(rw.normal_form(parse("A*B")) == parse("(m*C - b*I)/(m-1)"));
    CHECK(rw.normal_form(parse("B*C*A")) == parse("(C^2 - b*C)/(m*(m-1))"));
    CHECK(rw.normal_form(parse("A*C")) == parse("m*C*A"));
    CHECK(rw.normal_form(parse("C*B")) == parse("m*B*C"));
    CHECK(rw.normal_form(parse("A")) == parse("A"));
}

TEST_CASE("exhaustive reduction oracle agrees on ABAB") {
    const Rewriter& rw = sym_rw();
    std::set<std::string> seen, results;
    explore(rw, NcPoly::term(Word("ABAB")), seen, results);
    REQUIRE(results.size() == 1);
    const NcPoly expected = parse("(m^2*C^2 - 2*m*b*C + b^2*I)/(m-1)^2");
    CHECK(*results.begin() == expected.str());
    CHECK(rw.normal_form(NcPoly::term(Word("ABAB"))) == expected);
}

TEST_CASE("irreducibility pattern") {
    CHECK(is_irreducible(Word("CCAAA")));
    CHECK(is_irreducible(Word()));
    CHECK(is_irreducible(Word("BBC")));
    CHECK(is_irreducible(Word("C")));
    CHECK_FALSE(is_irreducible(Word("ACA")));
    CHECK_FALSE(is_irreducible(Word("BCA")));

    // Agreement with the redex scanner on every word up to length 6.
    const Rewriter& rw = sym_rw();
    enumerate_words(6, [&](const Word& w) {
        CHECK(is_irreducible(w) == !rw.find_leftmost_redex(w).has_value());
    });
}

TEST_CASE("normal form support is irreducible and fixes irreducible words") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
        const NcPoly nf = rw.normal_form(testutil::random_poly(rng, 7));
        for (const auto& [w, c] : nf.terms()) CHECK(is_irreducible(w));
    }
    enumerate_words(5, [&](const Word& w) {
        if (is_irreducible(w)) CHECK(rw.normal_form(w) == NcPoly::term(w));
    });
}

TEST_CASE("measure strictly decreases along leftmost reduction") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        Word start = testutil::random_word(rng, 8);
        // Walk the word-level reduction tree breadth-first for a while.
        std::vector<Word> frontier = {start};
        int steps = 0;
        while (!frontier.empty() && steps < 200) {
            Word w = frontier.back();
            frontier.pop_back();
            auto redex = rw.find_leftmost_redex(w);
            if (!redex) continue;
            ++steps;
            const Word left = w.prefix(redex->pos);
            const Word right = w.suffix_from(redex->pos + rw.rule_lhs(redex->rule).size());
            const NcPoly rhs = rw.rule_rhs(redex->rule);
            for (const auto& [v, c] : rhs.terms()) {
                const Word produced = left * v * right;
                CHECK(measure(produced) < measure(w));
                frontier.push_back(produced);
            }
        }
    }
}

TEST_CASE("strategy independence on random polynomials") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const NcPoly p = testutil::random_poly(rng, 8);
        CHECK(rw.normal_form(p) == rw.normal_form_random(p, rng));
    }
}

TEST_CASE("normal form is multiplicative") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        const NcPoly p = testutil::random_poly(rng, 5);
        const NcPoly q = testutil::random_poly(rng, 5);
        CHECK(rw.normal_form(p * q) == rw.normal_form(rw.normal_form(p) * rw.normal_form(q)));
    }
}

TEST_CASE("quotient equality") {
    const Rewriter& rw = sym_rw();
    CHECK(rw.quotient_equal(parse("A*B"), parse("m*B*A + b*I")));
    CHECK_FALSE(rw.quotient_equal(parse("A"), parse("B")));
    CHECK(rw.quotient_equal(parse("A*(B*C)"), parse("(A*B)*C")));
}

TEST_CASE("power-swap identities") {
    const Rewriter& rw = sym_rw();
    const TwistParams& params = rw.params();
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            const NcPoly lhs = NcPoly::term(Word::run(Letter::A, l) * Word::run(Letter::C, k));
            const NcPoly rhs =
                NcPoly::term(Word::run(Letter::C, k) * Word::run(Letter::A, l)) * params.m_power((long)k * l);
            CHECK(rw.quotient_equal(lhs, rhs));
            const NcPoly lhs2 = NcPoly::term(Word::run(Letter::C, k) * Word::run(Letter::B, l));
            const NcPoly rhs2 =
                NcPoly::term(Word::run(Letter::B, l) * Word::run(Letter::C, k)) * params.m_power((long)k * l);
            CHECK(rw.quotient_equal(lhs2, rhs2));
        }
}

TEST_CASE("concrete mode rewriting") {
    Rewriter rw(TwistParams::concrete(rat(2), rat(1)));
    CHECK(rw.normal_form(parse("B*A")) == parse("C - I"));
    CHECK(rw.normal_form(parse("A*B")) == parse("2*C - I"));
    Rewriter half(TwistParams::concrete(rat(1, 2), rat(1, 3)));
    // (m-1) = -1/2, so BA -> (C - I/3)/(-1/2) = -2*C + (2/3)*I
    CHECK(half.normal_form(parse("B*A")) == parse("-2*C + (2/3)*I"));
}

TEST_CASE("rule override changes normal forms and is cache-safe") {
    Rewriter rw(TwistParams::symbolic());
    const NcPoly before = rw.normal_form(parse("A*C"));
    CHECK(before == parse("m*C*A"));
    rw.override_rule_rhs({RuleName::AC, 1}, NcPoly::term(Word("CA")));
    CHECK(rw.normal_form(parse("A*C")) == parse("C*A"));
}
