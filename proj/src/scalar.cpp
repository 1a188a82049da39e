#include "twistalg/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace twistalg {

namespace {

// Dense univariate polynomial in m over Q, index = degree.
using UnivarM = std::vector<Rational>;

// Slices p into coefficients of powers of b, each a polynomial in m.
std::map<int, UnivarM> slices_by_b(const ParamPoly& p) {
    std::map<int, UnivarM> slices;
    for (const auto& [mono, c] : p.terms()) {
        UnivarM& s = slices[mono.second];
        if ((int)s.size() <= mono.first) s.resize(mono.first + 1, Rational(0));
        s[mono.first] = c;
    }
    return slices;
}

// Exact division by (m - 1) via synthetic division of every b-slice;
// nullopt if any slice leaves a remainder (i.e. does not vanish at m = 1).
std::optional<ParamPoly> try_div_m_minus_1(const ParamPoly& p) {
    ParamPoly out;
    for (auto& [db, s] : slices_by_b(p)) {
        if (s.size() < 2) return std::nullopt;
        Rational carry = 0;
        for (size_t i = s.size(); i-- > 1;) {
            carry += s[i];
            if (carry != 0) out.set_term({(int)(i - 1), db}, carry);
        }
        if (carry + s[0] != 0) return std::nullopt;  // remainder = value at m = 1
    }
    return out;
}

}  // namespace

Scalar::Scalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1L);
        return;
    }
    // Joint rational content: scale so both sides have integer coefficients
    // with gcd 1 across num and den together.
    mpz_class den_lcm = 1;
    for (const auto& [mono, c] : num_.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [mono, c] : den_.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    auto fold_gcd = [&](const ParamPoly& p) {
        for (const auto& [mono, c] : p.terms()) {
            mpz_class scaled_num = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
        }
    };
    fold_gcd(num_);
    fold_gcd(den_);
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    num_.scale(scale);
    den_.scale(scale);

    // Common monomial factor.
    int dm = std::min(num_.min_deg_m(), den_.min_deg_m());
    int db = std::min(num_.min_deg_b(), den_.min_deg_b());
    if (dm > 0 || db > 0) {
        num_ = num_.shift_down(dm, db);
        den_ = den_.shift_down(dm, db);
    }

    // Divide out common (m - 1) factors; together with the monomial step
    // this reaches lowest terms for every denominator the rewrite rules
    // produce (products of m-powers and (m-1)-powers). No polynomial gcd.
    for (;;) {
        auto qn = try_div_m_minus_1(num_);
        if (!qn) break;
        auto qd = try_div_m_minus_1(den_);
        if (!qd) break;
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }

    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value of a symbolic scalar");
    if (num_.is_zero()) return 0;
    Rational q = num_.constant_value() / den_.constant_value();
    q.canonicalize();
    return q;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        Scalar r(std::move(num_), std::move(den_));
        return *this = std::move(r);
    }
    Scalar r(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this = std::move(r);
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
        Scalar r(std::move(num_), std::move(den_));
        return *this = std::move(r);
    }
    Scalar r(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this = std::move(r);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r(1L);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

bool Scalar::is_negative_leading() const {
    if (num_.is_zero()) return false;
    return num_.leading_coeff() < 0;
}

Scalar Scalar::specialize(const Rational& m, const Rational& b) const {
    Rational d = den_.eval(m, b);
    if (d == 0)
        throw DenominatorVanishes("denominator " + den_.str() + " vanishes at m=" +
                                  rational_str(m) + ", b=" + rational_str(b));
    Rational q = num_.eval(m, b) / d;
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (is_rational()) return rational_str(rational_value());
    auto side = [](const ParamPoly& p) {
        std::string s = p.str();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return side(num_) + "/" + side(den_);
}

TwistParams TwistParams::symbolic() { return TwistParams(Mode::symbolic, 0, 0); }

TwistParams TwistParams::concrete(const Rational& m, const Rational& b) {
    if (m == 0) throw InvalidParameter("parameter m must be nonzero");
    if (m == 1) throw InvalidParameter("parameter m = 1 is excluded");
    return TwistParams(Mode::concrete, m, b);
}

const Rational& TwistParams::m_value() const {
    if (!is_concrete()) throw std::logic_error("m_value in symbolic mode");
    return m_;
}

const Rational& TwistParams::b_value() const {
    if (!is_concrete()) throw std::logic_error("b_value in symbolic mode");
    return b_;
}

bool TwistParams::lie_ok() const {
    if (mode_ == Mode::symbolic) return true;
    return m_ != -1;  // the only rational roots of unity are +/-1; m = 1 never constructs
}

Scalar TwistParams::m() const {
    return is_concrete() ? Scalar(m_) : Scalar::sym_m();
}

Scalar TwistParams::b() const {
    return is_concrete() ? Scalar(b_) : Scalar::sym_b();
}

Scalar TwistParams::m_power(long k) const {
    if (is_concrete()) {
        Rational r = 1;
        for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= m_;
        if (k < 0) r = 1 / r;
        return Scalar(r);
    }
    if (k >= 0) return Scalar(ParamPoly::monomial((int)k, 0, 1));
    return Scalar(ParamPoly(1L), ParamPoly::monomial((int)-k, 0, 1));
}

}  // namespace twistalg
