#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twistalg/nc_poly.hpp"

namespace twistalg {

/// The rewrite rules, named by their left-hand words. BCkA stands for the
/// whole family with left-hand side B C^k A, k >= 1.
enum class RuleName { AB, AC, BA, CB, BCkA };

/// A concrete rule instance; k is 1 unless the rule is BCkA.
struct RuleRef {
    RuleName name;
    int k = 1;
    bool operator==(const RuleRef& o) const = default;
    std::string str() const;
};

/// A rule match inside a word: the left-hand side of `rule` occurs at `pos`.
struct Redex {
    size_t pos;
    RuleRef rule;
};

bool is_irreducible(const Word& w);

/// Rewriting engine for the relation A*B = m*B*A + b*I presented on the
/// three generators A, B, C. Holds the parameters, the rule right-hand
/// sides, and a per-instance cache of word normal forms.
class Rewriter {
public:
    explicit Rewriter(TwistParams params);

    const TwistParams& params() const { return params_; }

    Word rule_lhs(const RuleRef& r) const;
    NcPoly rule_rhs(const RuleRef& r) const;

    std::optional<Redex> find_leftmost_redex(const Word& w) const;
    std::vector<Redex> find_all_redexes(const Word& w) const;

    /// The linear map fixing every word except L*lhs(rule)*R, which it sends
    /// to L*rhs(rule)*R.
    NcPoly reduce_at(const NcPoly& p, const Word& left, const RuleRef& rule, const Word& right) const;

    NcPoly normal_form(const Word& w) const;
    NcPoly normal_form(const NcPoly& p) const;

    /// Normal form by a seeded random redex strategy; used to exercise
    /// strategy independence.
    NcPoly normal_form_random(const NcPoly& p, std::mt19937_64& rng) const;

    /// Reduces to normal form one whole-polynomial reduction at a time and
    /// records the applied (left, rule, right) steps.
    struct Step {
        Word left;
        RuleRef rule;
        Word right;
        std::string str() const;
    };
    std::pair<NcPoly, std::vector<Step>> normal_form_traced(const NcPoly& p) const;

    bool quotient_equal(const NcPoly& p, const NcPoly& q) const;

    /// Replaces a rule right-hand side (the BCkA family for the given k
    /// only). Supports mutation testing; clears the normal-form cache.
    void override_rule_rhs(const RuleRef& rule, NcPoly rhs);

private:
    TwistParams params_;
    NcPoly ab_rhs_, ac_rhs_, ba_rhs_, cb_rhs_;
    mutable std::map<int, NcPoly> eps_rhs_cache_;
    std::map<int, NcPoly> eps_rhs_override_;
    mutable std::map<Word, NcPoly> nf_cache_;

    std::optional<RuleRef> match_at(const Word& w, size_t i) const;
    const NcPoly& nf_word(const Word& w) const;
};

}  // namespace twistalg
