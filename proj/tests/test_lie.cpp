#include "doctest.h"
#include "test_util.hpp"
#include "twistalg/lie.hpp"
#include "twistalg/parse.hpp"
#include "twistalg/span.hpp"

using namespace twistalg;
using testutil::rat;

namespace {

const Rewriter& sym_rw() {
    static Rewriter rw{TwistParams::symbolic()};
    return rw;
}

// Random combination of the predicted bracket-part basis words.
NcPoly random_lie_combo(std::mt19937_64& rng, int max_degree) {
    const auto basis = predicted_lie_basis(max_degree);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> n_terms(1, 4);
    NcPoly p;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) p += basis[pick(rng)] * testutil::random_scalar(rng);
    return p;
}

}  // namespace

TEST_CASE("span solver row reduction") {
    SpanSolver span;
    CHECK(span.dim() == 0);
    span.insert(parse("A + B"));
    span.insert(parse("A - B"));
    CHECK(span.dim() == 2);
    span.insert(parse("2*A"));  // dependent
    CHECK(span.dim() == 2);
    CHECK(span.contains(parse("B")));
    CHECK_FALSE(span.contains(parse("C")));

    auto combo = span.solve(parse("3*A + B"));
    REQUIRE(combo.has_value());
    NcPoly acc;
    const std::vector<NcPoly> gens = {parse("A + B"), parse("A - B"), parse("2*A")};
    for (const auto& [idx, c] : *combo) acc += gens[idx] * c;
    CHECK(acc == parse("3*A + B"));
    CHECK_FALSE(span.solve(parse("C")).has_value());
}

TEST_CASE("ad_power identities") {
    const Rewriter& rw = sym_rw();
    const TwistParams& params = rw.params();
    const NcPoly a = parse("A"), b = parse("B"), c = parse("C");
    for (int k = 0; k <= 6; ++k)
        CHECK(ad_power(rw, c, k, a) ==
              NcPoly::term(Word::run(Letter::C, k) * Word::single(Letter::A)) *
                  (Scalar(1L) - params.m()).pow(k));
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
            CHECK(ad_power(rw, a, l, NcPoly::term(Word::run(Letter::C, k))) ==
                  NcPoly::term(Word::run(Letter::C, k) * Word::run(Letter::A, l)) *
                      (params.m_power(k) - Scalar(1L)).pow(l));
    CHECK(ad_power(rw, a, 0, parse("A*B")) == rw.normal_form(parse("A*B")));
}

TEST_CASE("decompose splits by support pattern") {
    const Rewriter& rw = sym_rw();
    Decomposition d = decompose(rw, parse("A*B"));
    CHECK(d.lie_part == parse("(m/(m-1))*C"));
    CHECK(d.complement_part == parse("-(b/(m-1))*I"));

    Decomposition d2 = decompose(rw, parse("A^2 + C*A"));
    CHECK(d2.lie_part == parse("C*A"));
    CHECK(d2.complement_part == parse("A^2"));

    Decomposition d3 = decompose(rw, NcPoly());
    CHECK(d3.lie_part.is_zero());
    CHECK(d3.complement_part.is_zero());

    // A and B alone are bracket-part words, higher pure powers are not.
    Decomposition d4 = decompose(rw, parse("A + B^3"));
    CHECK(d4.lie_part == parse("A"));
    CHECK(d4.complement_part == parse("B^3"));
}

TEST_CASE("is_lie_polynomial") {
    const Rewriter& rw = sym_rw();
    CHECK(is_lie_polynomial(rw, parse("[A,B]")));
    CHECK_FALSE(is_lie_polynomial(rw, parse("A^2")));
    // A*B has a unit complement term unless b = 0.
    CHECK_FALSE(is_lie_polynomial(rw, parse("A*B")));
    Rewriter b0(TwistParams::concrete(rat(2), rat(0)));
    CHECK(is_lie_polynomial(b0, parse("A*B")));
    Rewriter b1(TwistParams::concrete(rat(2), rat(1)));
    CHECK_FALSE(is_lie_polynomial(b1, parse("A*B")));
}

TEST_CASE("witness examples") {
    const Rewriter& rw = sym_rw();
    CHECK(witness(rw, parse("C")).str() == "[A,B]");
    CHECK(witness(rw, parse("C*A")).str() == "(1/(m-1))*[A,[A,B]]");
    CHECK_THROWS_AS(witness(rw, parse("A^2")), NotLiePolynomial);

    // The C^2 witness expands back to C^2.
    const LieExpr w2 = witness(rw, parse("C^2"));
    CHECK(expand(rw, w2) == parse("C^2"));
    // Its rendering stays parseable and expansion-correct.
    CHECK(rw.normal_form(parse(w2.str())) == parse("C^2"));
}

TEST_CASE("witness soundness on random Lie polynomials") {
    const Rewriter& rw = sym_rw();
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        const NcPoly p = random_lie_combo(rng, 6);
        const LieExpr w = witness(rw, p);
        CHECK(expand(rw, w) == decompose(rw, p).lie_part);
    }
}

TEST_CASE("witness in concrete mode") {
    Rewriter rw(TwistParams::concrete(rat(2), rat(1)));
    std::mt19937_64 rng(59);
    for (int t = 0; t < 10; ++t) {
        NcPoly p = random_lie_combo(rng, 5).specialized(rw.params());
        const LieExpr w = witness(rw, p);
        CHECK(expand(rw, w) == decompose(rw, p).lie_part);
    }
}

TEST_CASE("root of unity guard") {
    Rewriter rw(TwistParams::concrete(rat(-1), rat(0)));
    // Rewriting still works.
    CHECK(rw.normal_form(parse("A*B")) == parse("(1/2)*C"));
    CHECK_THROWS_AS(decompose(rw, parse("A")), RootOfUnityParam);
    CHECK_THROWS_AS(is_lie_polynomial(rw, parse("A")), RootOfUnityParam);
    CHECK_THROWS_AS(witness(rw, parse("A")), RootOfUnityParam);
    CHECK_THROWS_AS(lie_closure(rw, 2), RootOfUnityParam);
}

TEST_CASE("closure at small degrees") {
    const Rewriter& rw = sym_rw();
    ClosureReport r2 = lie_closure(rw, 2);
    CHECK(r2.spans_equal);
    CHECK(r2.computed_basis.size() == 3);

    ClosureReport r3 = lie_closure(rw, 3);
    CHECK(r3.spans_equal);
    CHECK(r3.computed_basis.size() == 5);
    SpanSolver span;
    for (const auto& v : r3.computed_basis) span.insert(v);
    for (const char* s : {"A", "B", "C", "C*A", "B*C"}) CHECK(span.contains(parse(s)));

    CHECK(lie_closure(rw, 4).spans_equal);
    CHECK(lie_closure(rw, 5).spans_equal);
    CHECK_THROWS_AS(lie_closure(rw, 0), std::invalid_argument);
    CHECK_THROWS_AS(lie_closure(rw, kMaxClosureDegree + 1), std::invalid_argument);
}

TEST_CASE("closure in concrete mode and at higher degree") {
    Rewriter rw(TwistParams::concrete(rat(3), rat(-2)));
    CHECK(lie_closure(rw, 6).spans_equal);
    Rewriter sym(TwistParams::symbolic());
    CHECK(lie_closure(sym, 8).spans_equal);
}

TEST_CASE("membership agreement between decompose and the closure span") {
    const Rewriter& rw = sym_rw();
    ClosureReport report = lie_closure(rw, 5);
    REQUIRE(report.spans_equal);
    SpanSolver span;
    for (const auto& v : report.computed_basis) span.insert(v);

    std::mt19937_64 rng(61);
    for (int t = 0; t < 40; ++t) {
        NcPoly p = random_lie_combo(rng, 5);
        if (t % 2) {
            // Contaminate with a complement word half the time.
            std::uniform_int_distribution<int> n(2, 4);
            const Letter l = (t % 4 == 1) ? Letter::A : Letter::B;
            p += NcPoly::term(Word::run(l, n(rng)), testutil::random_scalar(rng));
        }
        const NcPoly nf = rw.normal_form(p);
        if (nf.degree() > 5) continue;
        CHECK(is_lie_polynomial(rw, p) == span.contains(nf));
    }
}

TEST_CASE("brackets of bracket-part basis words stay in the bracket part") {
    const Rewriter& rw = sym_rw();
    // Every basis word of the bracket part with exponents up to 4.
    std::vector<NcPoly> basis = {parse("A"), parse("B")};
    for (int k = 1; k <= 4; ++k) {
        basis.push_back(NcPoly::term(Word::run(Letter::C, k)));
        for (int l = 1; l <= 4; ++l) {
            basis.push_back(NcPoly::term(Word::run(Letter::C, k) * Word::run(Letter::A, l)));
            basis.push_back(NcPoly::term(Word::run(Letter::B, l) * Word::run(Letter::C, k)));
        }
    }
    for (const auto& l : basis)
        for (const auto& r : basis) {
            const Decomposition d = decompose(rw, bracket(l, r));
            CAPTURE(l.str());
            CAPTURE(r.str());
            CHECK(d.complement_part.is_zero());
        }
}

TEST_CASE("mixed brackets land in the expected span") {
    const Rewriter& rw = sym_rw();
    for (int u = 1; u <= 3; ++u)
        for (int v = 1; v <= 3; ++v)
            for (int y = 1; y <= 3; ++y)
                for (int x = 1; x <= 3; ++x) {
                    const NcPoly l = NcPoly::term(Word::run(Letter::C, u) * Word::run(Letter::A, v));
                    const NcPoly r = NcPoly::term(Word::run(Letter::B, y) * Word::run(Letter::C, x));
                    const NcPoly nf = rw.normal_form(bracket(l, r));
                    for (const auto& [w, c] : nf.terms()) {
                        // Support must avoid I, A^n and B^n entirely.
                        CHECK(!w.empty());
                        CHECK(w.count(Letter::C) > 0);
                    }
                }
}
