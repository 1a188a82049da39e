#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistalg/rewrite.hpp"

namespace twistalg {

struct CheckEntry {
    std::string name;
    std::string params;
    bool pass = false;
    std::string detail;  // counterexample or found combination
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    bool all_pass() const;
    void add(std::string name, std::string params, bool pass, std::string detail = "");
    void merge(CheckReport other);
    std::string text() const;
};

struct CheckConfig {
    int max_exp = 6;          // reordering identity exponents
    int n_max = 8;            // equal-exponent product identities
    int k_max = 6;            // ad-power / C-power identities
    int l_max = 6;
    int ambiguity_max_k = 20;
    int resolution_table_max_k = 20;
    int chain_gen_max_k = 10;  // BC^kA generator recursion depth
    bool presentation = true;
    int confluence_trials = 1000;
    int confluence_max_len = 10;
    std::uint64_t seed = 0;

    static CheckConfig none();
};

/// Reordering identities: the power swaps A^l C^k and C^k B^l, the bracket
/// catalogue on basis words, and the two mixed A/B brackets.
CheckReport verify_reordering(const Rewriter& rw, int max_exp);

/// Equal-exponent products: factorizations of (m-1)^n A^nB^n and
/// (m-1)^n B^nA^n, their unit coefficient (-1)^n b^n, and C dividing the
/// remainder.
CheckReport verify_equalexp(const Rewriter& rw, int n_max);

/// ad-power identities: (ad C)^k(A), the C-power recursion, (ad A)^l(C^k)
/// and (ad B)^l(C^k).
CheckReport verify_adpower_identities(const Rewriter& rw, int k_max, int l_max);

/// Equality of the two generating sets of the defining ideal, certified by
/// free-algebra expansion of independently solved combinations; known
/// inconsistent variant combinations are flagged as rejected.
CheckReport verify_presentation_ideals(const Rewriter& rw, int chain_gen_max_k);

/// Leftmost vs seeded-random reduction strategy on random polynomials.
CheckReport verify_confluence_random(const Rewriter& rw, int trials, int max_len,
                                     std::uint64_t seed);

/// Ambiguity enumeration, resolution, and the fixed resolution catalogue.
CheckReport verify_ambiguities(const Rewriter& rw, int max_k, int table_max_k);

/// Every verifier with the configured bounds, aggregated in a fixed order.
CheckReport run_all(const Rewriter& rw, const CheckConfig& config);

}  // namespace twistalg
