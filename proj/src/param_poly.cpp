#include "twistalg/param_poly.hpp"

#include <stdexcept>

namespace twistalg {

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s = s.substr(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

ParamPoly::ParamPoly(const Rational& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

ParamPoly::ParamPoly(long constant) : ParamPoly(Rational(constant)) {}

ParamPoly ParamPoly::var_m() { return monomial(1, 0, 1); }
ParamPoly ParamPoly::var_b() { return monomial(0, 1, 1); }

ParamPoly ParamPoly::monomial(int deg_m, int deg_b, const Rational& coeff) {
    ParamPoly p;
    if (coeff != 0) p.terms_[{deg_m, deg_b}] = coeff;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (this == &o) {
        scale(2);
        return *this;
    }
    for (const auto& [mono, c] : o.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [mono, c] : o.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial mono{ma.first + mb.first, ma.second + mb.second};
            auto it = r.terms_.find(mono);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (c != 0) r.terms_.emplace(mono, c);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

ParamPoly ParamPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("ParamPoly::pow needs a nonnegative exponent");
    ParamPoly r(Rational(1));
    ParamPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void ParamPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
}

Rational ParamPoly::eval(const Rational& m, const Rational& b) const {
    Rational acc = 0;
    for (const auto& [mono, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < mono.first; ++i) t *= m;
        for (int i = 0; i < mono.second; ++i) t *= b;
        acc += t;
    }
    return acc;
}

const Rational& ParamPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

int ParamPoly::deg_m() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.first);
    return d;
}

int ParamPoly::deg_b() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.second);
    return d;
}

int ParamPoly::min_deg_m() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.first;
    for (const auto& [mono, c] : terms_) d = std::min(d, mono.first);
    return d;
}

int ParamPoly::min_deg_b() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.second;
    for (const auto& [mono, c] : terms_) d = std::min(d, mono.second);
    return d;
}

ParamPoly ParamPoly::shift_down(int dm, int db) const {
    ParamPoly r;
    for (const auto& [mono, c] : terms_) {
        if (mono.first < dm || mono.second < db)
            throw std::logic_error("shift_down below minimum degree");
        r.terms_[{mono.first - dm, mono.second - db}] = c;
    }
    return r;
}

void ParamPoly::set_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0)
        terms_.erase(mono);
    else
        terms_[mono] = coeff;
}

namespace {

void append_monomial(std::string& out, const ParamPoly::Monomial& mono, const Rational& coeff,
                     bool first) {
    Rational a = abs(coeff);
    if (first) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? '-' : '+';
    }
    bool has_vars = mono.first > 0 || mono.second > 0;
    if (a != 1 || !has_vars) {
        out += rational_str(a);
        if (has_vars) out += '*';
    }
    if (mono.first > 0) {
        out += 'm';
        if (mono.first > 1) out += '^' + std::to_string(mono.first);
    }
    if (mono.first > 0 && mono.second > 0) out += '*';
    if (mono.second > 0) {
        out += 'b';
        if (mono.second > 1) out += '^' + std::to_string(mono.second);
    }
}

}  // namespace

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_monomial(out, it->first, it->second, first);
        first = false;
    }
    return out;
}

}  // namespace twistalg
