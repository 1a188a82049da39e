#include "doctest.h"
#include "test_util.hpp"
#include "twistalg/diamond.hpp"
#include "twistalg/parse.hpp"

using namespace twistalg;
using testutil::rat;

namespace {

const Rewriter& sym_rw() {
    static Rewriter rw{TwistParams::symbolic()};
    return rw;
}

Ambiguity find_by_id(const std::vector<Ambiguity>& list, const std::string& id) {
    for (const Ambiguity& a : list)
        if (a.id() == id) return a;
    FAIL("ambiguity not found: " << id);
    return list.front();
}

}  // namespace

TEST_CASE("ambiguity counts") {
    CHECK(enumerate_ambiguities(1).size() == 9);
    CHECK(enumerate_ambiguities(3).size() == 17);
    CHECK(enumerate_ambiguities(10).size() == 45);
    CHECK(enumerate_inclusions_brute_force(50).empty());
}

TEST_CASE("brute force matches the catalogue") {
    for (int k : {1, 2, 5, 10})
        CHECK(enumerate_overlaps_brute_force(k) == ambiguity_catalogue(k));
}

TEST_CASE("expected overlap shapes at k = 1") {
    auto list = enumerate_ambiguities(1);
    std::vector<std::string> ids;
    for (const auto& a : list) ids.push_back(a.id());
    for (const char* expected : {"A*B*A", "A*C*B", "B*A*B", "B*A*C", "C*B*A", "A*B*C*A", "C*B*C*A",
                                 "B*C*A*B", "B*C*A*C"})
        CHECK(std::count(ids.begin(), ids.end(), expected) == 1);
}

TEST_CASE("resolve joins both sides") {
    const Rewriter& rw = sym_rw();
    auto list = enumerate_ambiguities(2);

    // Overlap of AB and BA at ABA: the left side is already irreducible,
    // the right side needs exactly one AC step.
    ResolutionTrace t = resolve(rw, find_by_id(list, "A*B*A"));
    CHECK(t.lhs_steps.empty());
    REQUIRE(t.rhs_steps.size() == 1);
    CHECK(t.rhs_steps[0].rule == RuleRef{RuleName::AC, 1});
    CHECK(t.common == parse("(m*C*A - b*A)/(m-1)"));

    // Overlap of BA and AB at BAB: one CB step on the left, none on the right.
    ResolutionTrace t3 = resolve(rw, find_by_id(list, "B*A*B"));
    REQUIRE(t3.lhs_steps.size() == 1);
    CHECK(t3.lhs_steps[0].rule == RuleRef{RuleName::CB, 1});
    CHECK(t3.rhs_steps.empty());

    // The k = 2 family member overlapping AB: common value reached.
    ResolutionTrace t6 = resolve(rw, find_by_id(list, "A*B*C^2*A"));
    CHECK(t6.common == parse("(m*C^3*A - b*C^2*A)/(m-1)"));
}

TEST_CASE("resolution fails on a corrupted rule") {
    Rewriter rw(TwistParams::symbolic());
    rw.override_rule_rhs({RuleName::AC, 1}, NcPoly::term(Word("CA")));  // drops the factor m
    auto list = enumerate_ambiguities(1);
    CHECK_THROWS_AS(resolve(rw, find_by_id(list, "A*C*B")), NotResolvable);
}

TEST_CASE("reduction chains walk a letter across a C run") {
    const Rewriter& rw = sym_rw();
    const TwistParams& params = rw.params();
    for (int k = 1; k <= 8; ++k) {
        for (int l = 1; l <= 8; ++l) {
            const NcPoly acl = NcPoly::term(Word::single(Letter::A) * Word::run(Letter::C, l));
            const NcPoly got = apply_chain(rw, ChainKind::AC, k, acl);
            if (l == k)
                CHECK(got == NcPoly::term(Word::run(Letter::C, k) * Word::single(Letter::A)) *
                                 params.m_power(k));
            else
                CHECK(got == acl);

            const NcPoly clb = NcPoly::term(Word::run(Letter::C, l) * Word::single(Letter::B));
            const NcPoly got2 = apply_chain(rw, ChainKind::CB, k, clb);
            if (l == k)
                CHECK(got2 == NcPoly::term(Word::single(Letter::B) * Word::run(Letter::C, k)) *
                                  params.m_power(k));
            else
                CHECK(got2 == clb);
        }
        for (int h = 1; h <= 8; ++h) {
            const NcPoly cha = NcPoly::term(Word::run(Letter::C, h) * Word::single(Letter::A));
            CHECK(apply_chain(rw, ChainKind::AC, k, cha) == cha);
            const NcPoly bch = NcPoly::term(Word::single(Letter::B) * Word::run(Letter::C, h));
            CHECK(apply_chain(rw, ChainKind::CB, k, bch) == bch);
        }
    }
}

TEST_CASE("resolution table replays and matches resolve") {
    const Rewriter& rw = sym_rw();
    const int max_k = 20;
    auto rows = verify_resolution_table(rw, max_k);
    CHECK(rows.size() == 5 + 4 * max_k);
    for (const auto& row : rows) {
        CAPTURE(row.id);
        CHECK(row.pass);
    }

    // Row-by-row: the strategies' common value is the normal form that
    // resolve() reaches for the ambiguity of the same shape.
    auto small_rows = verify_resolution_table(rw, 3);
    for (const Ambiguity& a : enumerate_ambiguities(3)) {
        ResolutionTrace t = resolve(rw, a);
        bool matched = false;
        for (const auto& row : small_rows) {
            if (row.id == a.id()) {
                CHECK(row.common == t.common);
                matched = true;
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("resolution table in concrete mode") {
    Rewriter rw(TwistParams::concrete(rat(3), rat(-2)));
    for (const auto& row : verify_resolution_table(rw, 10)) {
        CAPTURE(row.id);
        CHECK(row.pass);
    }
}
