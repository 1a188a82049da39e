#include "twistalg/rewrite.hpp"

#include <stdexcept>

namespace twistalg {

std::string RuleRef::str() const {
    switch (name) {
        case RuleName::AB: return "AB";
        case RuleName::AC: return "AC";
        case RuleName::BA: return "BA";
        case RuleName::CB: return "CB";
        case RuleName::BCkA: return "BC^" + std::to_string(k) + "A";
    }
    return "?";
}

std::string Rewriter::Step::str() const {
    std::string out = "r[";
    if (!left.empty()) out += left.str() + " | ";
    out += rule.str();
    if (!right.empty()) out += " | " + right.str();
    out += "]";
    return out;
}

bool is_irreducible(const Word& w) {
    const std::string& s = w.plain();
    // C^k A^l or B^l C^k for k, l >= 0.
    size_t i = 0;
    while (i < s.size() && s[i] == 'C') ++i;
    size_t j = i;
    while (j < s.size() && s[j] == 'A') ++j;
    if (j == s.size()) return true;
    i = 0;
    while (i < s.size() && s[i] == 'B') ++i;
    j = i;
    while (j < s.size() && s[j] == 'C') ++j;
    return j == s.size();
}

Rewriter::Rewriter(TwistParams params) : params_(std::move(params)) {
    const Scalar m = params_.m();
    const Scalar b = params_.b();
    const Scalar inv_m1 = (m - Scalar(1L)).inv();
    const Word wC = Word::single(Letter::C);
    const Word wI;
    // A*B -> (m*C - b*I)/(m-1)
    ab_rhs_.add_term(wC, m * inv_m1);
    ab_rhs_.add_term(wI, -(b * inv_m1));
    // A*C -> m*C*A
    ac_rhs_.add_term(Word("CA"), m);
    // B*A -> (C - b*I)/(m-1)
    ba_rhs_.add_term(wC, inv_m1);
    ba_rhs_.add_term(wI, -(b * inv_m1));
    // C*B -> m*B*C
    cb_rhs_.add_term(Word("BC"), m);
}

Word Rewriter::rule_lhs(const RuleRef& r) const {
    switch (r.name) {
        case RuleName::AB: return Word("AB");
        case RuleName::AC: return Word("AC");
        case RuleName::BA: return Word("BA");
        case RuleName::CB: return Word("CB");
        case RuleName::BCkA:
            return Word::single(Letter::B) * Word::run(Letter::C, r.k) * Word::single(Letter::A);
    }
    throw std::logic_error("bad rule");
}

NcPoly Rewriter::rule_rhs(const RuleRef& r) const {
    switch (r.name) {
        case RuleName::AB: return ab_rhs_;
        case RuleName::AC: return ac_rhs_;
        case RuleName::BA: return ba_rhs_;
        case RuleName::CB: return cb_rhs_;
        case RuleName::BCkA: break;
    }
    if (r.k < 1) throw std::invalid_argument("BC^kA rule needs k >= 1");
    if (auto it = eps_rhs_override_.find(r.k); it != eps_rhs_override_.end()) return it->second;
    auto it = eps_rhs_cache_.find(r.k);
    if (it != eps_rhs_cache_.end()) return it->second;
    // B*C^k*A -> (C^{k+1} - b*C^k) / (m^k (m-1))
    const Scalar denom_inv = (params_.m_power(r.k) * (params_.m() - Scalar(1L))).inv();
    NcPoly rhs;
    rhs.add_term(Word::run(Letter::C, r.k + 1), denom_inv);
    rhs.add_term(Word::run(Letter::C, r.k), -(params_.b() * denom_inv));
    eps_rhs_cache_.emplace(r.k, rhs);
    return rhs;
}

std::optional<RuleRef> Rewriter::match_at(const Word& w, size_t i) const {
    const std::string& s = w.plain();
    const size_t n = s.size();
    switch (s[i]) {
        case 'A':
            if (i + 1 < n && s[i + 1] == 'B') return RuleRef{RuleName::AB, 1};
            if (i + 1 < n && s[i + 1] == 'C') return RuleRef{RuleName::AC, 1};
            return std::nullopt;
        case 'B': {
            if (i + 1 < n && s[i + 1] == 'A') return RuleRef{RuleName::BA, 1};
            size_t j = i + 1;
            while (j < n && s[j] == 'C') ++j;
            if (j > i + 1 && j < n && s[j] == 'A') return RuleRef{RuleName::BCkA, int(j - i - 1)};
            return std::nullopt;
        }
        case 'C':
            if (i + 1 < n && s[i + 1] == 'B') return RuleRef{RuleName::CB, 1};
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Redex> Rewriter::find_leftmost_redex(const Word& w) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (auto r = match_at(w, i)) return Redex{i, *r};
    return std::nullopt;
}

std::vector<Redex> Rewriter::find_all_redexes(const Word& w) const {
    std::vector<Redex> out;
    for (size_t i = 0; i < w.size(); ++i)
        if (auto r = match_at(w, i)) out.push_back(Redex{i, *r});
    return out;
}

NcPoly Rewriter::reduce_at(const NcPoly& p, const Word& left, const RuleRef& rule,
                           const Word& right) const {
    const Word target = left * rule_lhs(rule) * right;
    const Scalar c = p.coeff(target);
    if (c.is_zero()) return p;
    NcPoly r = p;
    r.add_term(target, -c);
    const NcPoly rhs = rule_rhs(rule);
    for (const auto& [w, d] : rhs.terms()) r.add_term(left * w * right, c * d);
    return r;
}

// Iterative memoized DFS over the one-step expansion: reduction chains can
// be quadratic in the word length, too deep for plain recursion.
const NcPoly& Rewriter::nf_word(const Word& top) const {
    if (auto it = nf_cache_.find(top); it != nf_cache_.end()) return it->second;
    if (!find_leftmost_redex(top))
        return nf_cache_.emplace(top, NcPoly::term(top)).first->second;

    struct Frame {
        Word word;
        std::vector<std::pair<Word, Scalar>> expansion;
        size_t next = 0;
        NcPoly acc;
    };
    auto make_frame = [&](const Word& w, const Redex& redex) {
        Frame f;
        f.word = w;
        const Word left = w.prefix(redex.pos);
        const Word right = w.suffix_from(redex.pos + rule_lhs(redex.rule).size());
        const NcPoly rhs = rule_rhs(redex.rule);
        f.expansion.reserve(rhs.term_count());
        for (const auto& [v, d] : rhs.terms()) f.expansion.emplace_back(left * v * right, d);
        return f;
    };

    std::vector<Frame> stack;
    stack.push_back(make_frame(top, *find_leftmost_redex(top)));
    for (;;) {
        Frame& f = stack.back();
        if (f.next < f.expansion.size()) {
            const auto& [child, coeff] = f.expansion[f.next];
            auto it = nf_cache_.find(child);
            if (it == nf_cache_.end()) {
                if (auto redex = find_leftmost_redex(child)) {
                    stack.push_back(make_frame(child, *redex));
                    continue;  // f is invalid past this point
                }
                it = nf_cache_.emplace(child, NcPoly::term(child)).first;
            }
            ++f.next;
            for (const auto& [u, e] : it->second.terms()) f.acc.add_term(u, coeff * e);
        } else {
            auto it = nf_cache_.emplace(f.word, std::move(f.acc)).first;
            stack.pop_back();
            if (stack.empty()) return it->second;
        }
    }
}

NcPoly Rewriter::normal_form(const Word& w) const { return nf_word(w); }

NcPoly Rewriter::normal_form(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        const NcPoly& nf = nf_word(w);
        for (const auto& [u, d] : nf.terms()) out.add_term(u, c * d);
    }
    return out;
}

NcPoly Rewriter::normal_form_random(const NcPoly& p, std::mt19937_64& rng) const {
    NcPoly cur = p;
    for (;;) {
        std::vector<std::pair<Word, Redex>> choices;
        for (const auto& [w, c] : cur.terms())
            for (const Redex& r : find_all_redexes(w)) choices.emplace_back(w, r);
        if (choices.empty()) return cur;
        const auto& [w, redex] = choices[std::uniform_int_distribution<size_t>(0, choices.size() - 1)(rng)];
        const Word left = w.prefix(redex.pos);
        const Word right = w.suffix_from(redex.pos + rule_lhs(redex.rule).size());
        cur = reduce_at(cur, left, redex.rule, right);
    }
}

std::pair<NcPoly, std::vector<Rewriter::Step>> Rewriter::normal_form_traced(const NcPoly& p) const {
    NcPoly cur = p;
    std::vector<Step> steps;
    for (;;) {
        bool reduced = false;
        for (const auto& [w, c] : cur.terms()) {
            if (auto redex = find_leftmost_redex(w)) {
                const Word left = w.prefix(redex->pos);
                const Word right = w.suffix_from(redex->pos + rule_lhs(redex->rule).size());
                steps.push_back(Step{left, redex->rule, right});
                cur = reduce_at(cur, left, redex->rule, right);
                reduced = true;
                break;
            }
        }
        if (!reduced) return {cur, steps};
    }
}

bool Rewriter::quotient_equal(const NcPoly& p, const NcPoly& q) const {
    return normal_form(p) == normal_form(q);
}

void Rewriter::override_rule_rhs(const RuleRef& rule, NcPoly rhs) {
    switch (rule.name) {
        case RuleName::AB: ab_rhs_ = std::move(rhs); break;
        case RuleName::AC: ac_rhs_ = std::move(rhs); break;
        case RuleName::BA: ba_rhs_ = std::move(rhs); break;
        case RuleName::CB: cb_rhs_ = std::move(rhs); break;
        case RuleName::BCkA: eps_rhs_override_[rule.k] = std::move(rhs); break;
    }
    nf_cache_.clear();
    eps_rhs_cache_.clear();
}

}  // namespace twistalg
