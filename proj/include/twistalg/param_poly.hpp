#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace twistalg {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (base 10) into a canonical rational.
Rational rational_from_string(const std::string& text);
std::string rational_str(const Rational& q);

/// Sparse polynomial in the two relation parameters m and b with rational
/// coefficients. Keys are exponent pairs (deg_m, deg_b); zero coefficients
/// are never stored, so map equality is value equality.
class ParamPoly {
public:
    using Monomial = std::pair<int, int>;
    using TermMap = std::map<Monomial, Rational>;

    ParamPoly() = default;
    explicit ParamPoly(const Rational& constant);
    explicit ParamPoly(long constant);

    static ParamPoly var_m();
    static ParamPoly var_b();
    static ParamPoly monomial(int deg_m, int deg_b, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator*(const ParamPoly& o) const;
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly pow(int e) const;  // e >= 0
    void scale(const Rational& c);

    Rational eval(const Rational& m, const Rational& b) const;

    /// Leading coefficient under lex order with m > b.
    const Rational& leading_coeff() const;
    int deg_m() const;
    int deg_b() const;
    int min_deg_m() const;
    int min_deg_b() const;
    /// Exact division by m^dm * b^db; requires min degrees at least (dm, db).
    ParamPoly shift_down(int dm, int db) const;

    const TermMap& terms() const { return terms_; }
    void set_term(const Monomial& mono, const Rational& coeff);

    /// Compact text form, terms in descending lex order: "m^2*b-2*m+1".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace twistalg
