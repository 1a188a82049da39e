#include "twistalg/diamond.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistalg {

namespace {

std::vector<RuleRef> all_rules(int max_k) {
    std::vector<RuleRef> rules = {{RuleName::AB, 1}, {RuleName::AC, 1}, {RuleName::BA, 1}, {RuleName::CB, 1}};
    for (int k = 1; k <= max_k; ++k) rules.push_back({RuleName::BCkA, k});
    return rules;
}

Word lhs_of(const RuleRef& r) {
    // Left-hand words depend only on the rule, not on parameters.
    static const Rewriter probe{TwistParams::symbolic()};
    return probe.rule_lhs(r);
}

bool ambiguity_less(const Ambiguity& a, const Ambiguity& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    Word wa = a.word(), wb = b.word();
    if (wa != wb) return wa < wb;
    if (a.mu.name != b.mu.name) return a.mu.name < b.mu.name;
    if (a.mu.k != b.mu.k) return a.mu.k < b.mu.k;
    if (a.nu.name != b.nu.name) return a.nu.name < b.nu.name;
    return a.nu.k < b.nu.k;
}

}  // namespace

std::vector<Ambiguity> enumerate_overlaps_brute_force(int max_k) {
    std::vector<Ambiguity> out;
    const auto rules = all_rules(max_k);
    for (const RuleRef& mu : rules) {
        const Word wmu = lhs_of(mu);
        for (const RuleRef& nu : rules) {
            const Word wnu = lhs_of(nu);
            size_t max_x = std::min(wmu.size(), wnu.size());
            for (size_t x = 1; x <= max_x; ++x) {
                if (x == wmu.size() && x == wnu.size()) continue;  // identical words, no overlap
                if (wmu.plain().substr(wmu.size() - x) != wnu.plain().substr(0, x)) continue;
                out.push_back(Ambiguity{Ambiguity::Kind::overlap, mu, nu,
                                        wmu.prefix(wmu.size() - x),
                                        wnu.prefix(x),
                                        wnu.suffix_from(x)});
            }
        }
    }
    std::sort(out.begin(), out.end(), ambiguity_less);
    return out;
}

std::vector<Ambiguity> enumerate_inclusions_brute_force(int max_k) {
    std::vector<Ambiguity> out;
    const auto rules = all_rules(max_k);
    for (const RuleRef& mu : rules) {
        const Word wmu = lhs_of(mu);
        for (const RuleRef& nu : rules) {
            const Word wnu = lhs_of(nu);
            if (wmu.size() >= wnu.size()) continue;
            const std::string& inner = wmu.plain();
            const std::string& outer = wnu.plain();
            for (size_t pos = 0; pos + inner.size() <= outer.size(); ++pos) {
                if (outer.compare(pos, inner.size(), inner) != 0) continue;
                out.push_back(Ambiguity{Ambiguity::Kind::inclusion, mu, nu,
                                        wnu.prefix(pos), wmu,
                                        wnu.suffix_from(pos + inner.size())});
            }
        }
    }
    std::sort(out.begin(), out.end(), ambiguity_less);
    return out;
}

std::vector<Ambiguity> ambiguity_catalogue(int max_k) {
    using K = Ambiguity::Kind;
    auto r = [](RuleName n, int k = 1) { return RuleRef{n, k}; };
    auto w = [](const std::string& s) { return Word(s); };
    std::vector<Ambiguity> out = {
        {K::overlap, r(RuleName::AB), r(RuleName::BA), w("A"), w("B"), w("A")},
        {K::overlap, r(RuleName::AC), r(RuleName::CB), w("A"), w("C"), w("B")},
        {K::overlap, r(RuleName::BA), r(RuleName::AB), w("B"), w("A"), w("B")},
        {K::overlap, r(RuleName::BA), r(RuleName::AC), w("B"), w("A"), w("C")},
        {K::overlap, r(RuleName::CB), r(RuleName::BA), w("C"), w("B"), w("A")},
    };
    for (int k = 1; k <= max_k; ++k) {
        Word ck = Word::run(Letter::C, k);
        Word cka = ck * w("A");
        Word bck = w("B") * ck;
        out.push_back({K::overlap, r(RuleName::AB), r(RuleName::BCkA, k), w("A"), w("B"), cka});
        out.push_back({K::overlap, r(RuleName::CB), r(RuleName::BCkA, k), w("C"), w("B"), cka});
        out.push_back({K::overlap, r(RuleName::BCkA, k), r(RuleName::AB), bck, w("A"), w("B")});
        out.push_back({K::overlap, r(RuleName::BCkA, k), r(RuleName::AC), bck, w("A"), w("C")});
    }
    std::sort(out.begin(), out.end(), ambiguity_less);
    return out;
}

std::vector<Ambiguity> enumerate_ambiguities(int max_k) {
    if (max_k < 1) throw std::invalid_argument("enumerate_ambiguities needs max_k >= 1");
    std::vector<Ambiguity> found = enumerate_overlaps_brute_force(max_k);
    if (found != ambiguity_catalogue(max_k))
        throw std::logic_error("brute-force overlap list deviates from the catalogue");
    if (!enumerate_inclusions_brute_force(max_k).empty())
        throw std::logic_error("unexpected inclusion ambiguity");
    return found;
}

ResolutionTrace resolve(const Rewriter& rw, const Ambiguity& a) {
    ResolutionTrace t;
    if (a.kind == Ambiguity::Kind::overlap) {
        t.lhs_start = NcPoly::term(Word()) * rw.rule_rhs(a.mu) * NcPoly::term(a.right);
        t.rhs_start = NcPoly::term(a.left) * rw.rule_rhs(a.nu);
    } else {
        t.lhs_start = NcPoly::term(a.left) * rw.rule_rhs(a.mu) * NcPoly::term(a.right);
        t.rhs_start = rw.rule_rhs(a.nu);
    }
    auto [lhs_nf, lhs_steps] = rw.normal_form_traced(t.lhs_start);
    auto [rhs_nf, rhs_steps] = rw.normal_form_traced(t.rhs_start);
    if (!(lhs_nf == rhs_nf)) throw NotResolvable(a.id(), lhs_nf.str(), rhs_nf.str());
    t.lhs_steps = std::move(lhs_steps);
    t.rhs_steps = std::move(rhs_steps);
    t.common = std::move(lhs_nf);
    return t;
}

std::vector<Rewriter::Step> chain_steps(ChainKind kind, int k) {
    std::vector<Rewriter::Step> steps;
    for (int i = 0; i < k; ++i) {
        if (kind == ChainKind::AC)
            steps.push_back({Word::run(Letter::C, i), RuleRef{RuleName::AC, 1},
                             Word::run(Letter::C, k - 1 - i)});
        else
            steps.push_back({Word::run(Letter::C, k - 1 - i), RuleRef{RuleName::CB, 1},
                             Word::run(Letter::C, i)});
    }
    return steps;
}

NcPoly apply_chain(const Rewriter& rw, ChainKind kind, int k, const NcPoly& p) {
    if (k < 1) throw std::invalid_argument("chain needs k >= 1");
    NcPoly cur = p;
    for (const auto& s : chain_steps(kind, k)) cur = rw.reduce_at(cur, s.left, s.rule, s.right);
    return cur;
}

namespace {

NcPoly apply_steps(const Rewriter& rw, const std::vector<Rewriter::Step>& steps, NcPoly p) {
    for (const auto& s : steps) p = rw.reduce_at(p, s.left, s.rule, s.right);
    return p;
}

std::vector<Rewriter::Step> concat_steps(std::vector<Rewriter::Step> a,
                                         const std::vector<Rewriter::Step>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

ResolutionRowResult check_row(const Rewriter& rw, const Ambiguity& a, int k,
                              const std::vector<Rewriter::Step>& lambda,
                              const std::vector<Rewriter::Step>& rho) {
    NcPoly lhs = apply_steps(rw, lambda, NcPoly::term(Word()) * rw.rule_rhs(a.mu) * NcPoly::term(a.right));
    NcPoly rhs = apply_steps(rw, rho, NcPoly::term(a.left) * rw.rule_rhs(a.nu));
    ResolutionRowResult res;
    res.id = a.id();
    res.k = k;
    res.pass = lhs == rhs;
    if (res.pass)
        res.common = std::move(lhs);
    else
        res.detail = lhs.str() + " vs " + rhs.str();
    return res;
}

}  // namespace

std::vector<ResolutionRowResult> verify_resolution_table(const Rewriter& rw, int max_k) {
    std::vector<ResolutionRowResult> out;
    auto step = [](const std::string& left, RuleRef rule, const std::string& right) {
        return Rewriter::Step{Word(left), rule, Word(right)};
    };
    using Steps = std::vector<Rewriter::Step>;
    const Steps id;
    auto amb = [](RuleName mu_name, int mu_k, RuleName nu_name, int nu_k, const std::string& l,
                  const std::string& x, const std::string& r) {
        return Ambiguity{Ambiguity::Kind::overlap, {mu_name, mu_k}, {nu_name, nu_k}, Word(l), Word(x), Word(r)};
    };

    // Parameter-free shapes.
    out.push_back(check_row(rw, amb(RuleName::AB, 1, RuleName::BA, 1, "A", "B", "A"), 0, id,
                            {step("", {RuleName::AC, 1}, "")}));
    out.push_back(check_row(rw, amb(RuleName::AC, 1, RuleName::CB, 1, "A", "C", "B"), 0,
                            {step("C", {RuleName::AB, 1}, "")}, {step("", {RuleName::AB, 1}, "C")}));
    out.push_back(check_row(rw, amb(RuleName::BA, 1, RuleName::AB, 1, "B", "A", "B"), 0,
                            {step("", {RuleName::CB, 1}, "")}, id));
    out.push_back(check_row(rw, amb(RuleName::BA, 1, RuleName::AC, 1, "B", "A", "C"), 0, id,
                            {step("", {RuleName::BCkA, 1}, "")}));
    out.push_back(check_row(rw, amb(RuleName::CB, 1, RuleName::BA, 1, "C", "B", "A"), 0,
                            {step("", {RuleName::BCkA, 1}, "")}, id));

    // k-parameterized shapes.
    for (int k = 1; k <= max_k; ++k) {
        const std::string ck(k, 'C');
        out.push_back(check_row(rw, amb(RuleName::AB, 1, RuleName::BCkA, k, "A", "B", ck + "A"), k,
                                id, concat_steps(chain_steps(ChainKind::AC, k + 1), chain_steps(ChainKind::AC, k))));
        out.push_back(check_row(rw, amb(RuleName::CB, 1, RuleName::BCkA, k, "C", "B", ck + "A"), k,
                                {step("", {RuleName::BCkA, k + 1}, "")}, id));
        out.push_back(check_row(rw, amb(RuleName::BCkA, k, RuleName::AB, 1, "B" + ck, "A", "B"), k,
                                concat_steps(chain_steps(ChainKind::CB, k + 1), chain_steps(ChainKind::CB, k)), id));
        out.push_back(check_row(rw, amb(RuleName::BCkA, k, RuleName::AC, 1, "B" + ck, "A", "C"), k,
                                id, {step("", {RuleName::BCkA, k + 1}, "")}));
    }
    return out;
}

}  // namespace twistalg
