#pragma once

#include <stdexcept>
#include <string>

#include "twistalg/param_poly.hpp"

namespace twistalg {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero scalar") {}
};

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

/// Element of the coefficient field: a quotient num/den of ParamPolys.
///
/// Stored reduced: integer coefficients with joint content 1, common
/// monomial factors and common (m - 1) factors divided out, and the
/// denominator's leading coefficient (lex, m > b) positive. There is no
/// polynomial gcd anywhere; equality is decided by cross-multiplication, so
/// correctness does not depend on reaching lowest terms.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long n) : Scalar(Rational(n)) {}
    Scalar(const Rational& q) : num_(q) {}
    Scalar(ParamPoly num, ParamPoly den);  // throws DivisionByZero on zero den

    static Scalar sym_m() { return Scalar(ParamPoly::var_m()); }
    static Scalar sym_b() { return Scalar(ParamPoly::var_b()); }
    explicit Scalar(const ParamPoly& num) : Scalar(num, ParamPoly(1L)) {}

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    Scalar operator*(const Scalar& o) const;
    Scalar inv() const;  // throws DivisionByZero on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar pow(int e) const;  // negative e inverts (throws DivisionByZero on zero base)

    /// Field equality via cross-multiplication: a/b == c/d iff a*d == c*b.
    bool operator==(const Scalar& o) const;

    /// Sign of the leading numerator coefficient; drives "+"/"-" placement
    /// when the scalar is rendered as a term coefficient.
    bool is_negative_leading() const;

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    /// Substitutes concrete parameter values; throws DenominatorVanishes if
    /// the denominator evaluates to zero at (m, b).
    Scalar specialize(const Rational& m, const Rational& b) const;

    /// Canonical text: "p/q" for rationals in lowest terms, otherwise
    /// "p(m,b)/q(m)" with parenthesized multi-term sides.
    std::string str() const;

private:
    ParamPoly num_;
    ParamPoly den_{1L};
    void reduce();
};

enum class Mode { symbolic, concrete };

/// Validated parameters of the defining relation A*B = m*B*A + b*I.
/// Concrete mode requires m outside {0, 1}; Lie-side operations additionally
/// require that m is not a root of unity, which over the rationals just
/// excludes m = -1.
class TwistParams {
public:
    static TwistParams symbolic();
    static TwistParams concrete(const Rational& m, const Rational& b);

    Mode mode() const { return mode_; }
    bool is_concrete() const { return mode_ == Mode::concrete; }
    const Rational& m_value() const;
    const Rational& b_value() const;

    bool lie_ok() const;

    /// The parameters as field elements in the active mode.
    Scalar m() const;
    Scalar b() const;
    Scalar m_power(long k) const;  // k may be negative

private:
    TwistParams(Mode mode, Rational m, Rational b) : mode_(mode), m_(std::move(m)), b_(std::move(b)) {}
    Mode mode_;
    Rational m_, b_;
};

}  // namespace twistalg
