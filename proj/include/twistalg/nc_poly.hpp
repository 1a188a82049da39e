#pragma once

#include <map>
#include <optional>
#include <string>

#include "twistalg/scalar.hpp"
#include "twistalg/word.hpp"

namespace twistalg {

/// Finite Scalar-linear combination of words. Zero coefficients are never
/// stored; terms iterate in canonical order, which is also print order.
class NcPoly {
public:
    using TermMap = std::map<Word, Scalar, CanonicalWordLess>;

    NcPoly() = default;
    static NcPoly unit() { return term(Word(), Scalar(1L)); }
    static NcPoly term(const Word& w, const Scalar& c = Scalar(1L));
    static NcPoly letter(Letter l, const Scalar& c = Scalar(1L)) { return term(Word::single(l), c); }
    static NcPoly constant(const Scalar& c) { return term(Word(), c); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;
    const Word& leading_word() const;  // first in canonical order; requires nonzero

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { a += b; return a; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { a -= b; return a; }
    NcPoly operator*(const NcPoly& o) const;  // concatenation product
    NcPoly operator*(const Scalar& c) const;
    friend NcPoly operator*(const Scalar& c, const NcPoly& p) { return p * c; }

    void add_term(const Word& w, const Scalar& c);

    /// Equality of canonical forms: same support and pairwise equal
    /// coefficients (coefficient equality is field equality).
    bool operator==(const NcPoly& o) const;

    /// Max filtration degree over the support; 0 for the zero polynomial.
    int degree() const;

    /// The coefficient of I if the support is contained in {I}.
    std::optional<Scalar> as_scalar() const;

    /// Coefficient-wise specialization at concrete parameters (identity in
    /// symbolic mode).
    NcPoly specialized(const TwistParams& params) const;

    std::string str() const;

private:
    TermMap terms_;
};

NcPoly bracket(const NcPoly& p, const NcPoly& q);  // p*q - q*p
NcPoly pow(const NcPoly& p, int e);                // e >= 0

/// Rendering support shared by polynomials and bracket expressions:
/// coefficient prefix for a term, e.g. "" for 1, "2*", "(m/(m-1))*".
/// The caller handles the sign via Scalar::is_negative_leading.
std::string term_coeff_prefix(const Scalar& c);

}  // namespace twistalg
