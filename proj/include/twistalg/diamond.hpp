#pragma once

#include <string>
#include <vector>

#include "twistalg/rewrite.hpp"

namespace twistalg {

struct NotResolvable : std::runtime_error {
    NotResolvable(const std::string& id, const std::string& lhs_nf, const std::string& rhs_nf)
        : std::runtime_error("ambiguity " + id + " not resolvable: " + lhs_nf + " vs " + rhs_nf),
          lhs_nf(lhs_nf),
          rhs_nf(rhs_nf) {}
    std::string lhs_nf, rhs_nf;
};

/// Two rules whose left-hand sides share a word: overlap means
/// lhs(mu) = L*X and lhs(nu) = X*R with X nonempty; inclusion means
/// lhs(mu) = X sits strictly inside lhs(nu) = L*X*R.
struct Ambiguity {
    enum class Kind { overlap, inclusion };
    Kind kind;
    RuleRef mu, nu;
    Word left, shared, right;

    /// The whole ambiguous word L*X*R; also serves as the ambiguity id.
    Word word() const { return left * shared * right; }
    std::string id() const { return word().str(); }
    bool operator==(const Ambiguity& o) const = default;
};

/// All overlap ambiguities among the rules with the BC^kA family
/// instantiated for 1 <= k <= max_k, found by brute-force suffix/prefix
/// matching. Checked against the closed-form catalogue before returning;
/// inclusion ambiguities are verified absent.
std::vector<Ambiguity> enumerate_ambiguities(int max_k);

/// The same lists exposed separately for direct testing.
std::vector<Ambiguity> enumerate_overlaps_brute_force(int max_k);
std::vector<Ambiguity> enumerate_inclusions_brute_force(int max_k);
std::vector<Ambiguity> ambiguity_catalogue(int max_k);

/// Reduction sequences joining the two one-step results of an ambiguity to
/// their common normal form.
struct ResolutionTrace {
    NcPoly lhs_start, rhs_start;
    std::vector<Rewriter::Step> lhs_steps, rhs_steps;
    NcPoly common;
};

/// Reduces both sides of the ambiguity to normal form; throws NotResolvable
/// if the normal forms differ (they never do for this rule system).
ResolutionTrace resolve(const Rewriter& rw, const Ambiguity& a);

/// The two reduction chains that walk a single A (resp. B) across a run of
/// k C's: chain AC applies the AC rule at positions C^i _ C^{k-1-i} for
/// i = 0..k-1, chain CB applies the CB rule at positions C^{k-1-i} _ C^i.
enum class ChainKind { AC, CB };
NcPoly apply_chain(const Rewriter& rw, ChainKind kind, int k, const NcPoly& p);
std::vector<Rewriter::Step> chain_steps(ChainKind kind, int k);

/// One row of the fixed resolution catalogue: for each ambiguity shape the
/// specific reduction compositions applied to either side.
struct ResolutionRowResult {
    std::string id;
    int k = 0;  // 0 for the parameter-free rows
    bool pass = false;
    NcPoly common;  // the value both strategies reached (when pass)
    std::string detail;
};

/// Replays the fixed per-shape reduction strategies on both sides of every
/// ambiguity (k-families up to max_k) and checks the two results coincide.
std::vector<ResolutionRowResult> verify_resolution_table(const Rewriter& rw, int max_k);

}  // namespace twistalg
