#include "twistalg/nc_poly.hpp"

#include <stdexcept>

namespace twistalg {

NcPoly NcPoly::term(const Word& w, const Scalar& c) {
    NcPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty()) throw std::logic_error("leading_word of zero polynomial");
    return terms_.begin()->first;
}

NcPoly NcPoly::operator-() const {
    NcPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    if (this == &o) {
        for (auto& [w, c] : terms_) c += c;
        return *this;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NcPoly NcPoly::operator*(const Scalar& c) const {
    NcPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

int NcPoly::degree() const {
    if (terms_.empty()) return 0;
    // Canonical order is degree-descending, so the first word is maximal.
    return filtration_degree(terms_.begin()->first);
}

std::optional<Scalar> NcPoly::as_scalar() const {
    if (terms_.empty()) return Scalar();
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

NcPoly NcPoly::specialized(const TwistParams& params) const {
    if (!params.is_concrete()) return *this;
    NcPoly r;
    for (const auto& [w, c] : terms_)
        r.add_term(w, c.specialize(params.m_value(), params.b_value()));
    return r;
}

std::string term_coeff_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    std::string s = c.str();
    // Parenthesize unless the text is a single product of atomic factors.
    bool atomic = s.find('/') == std::string::npos && s.find('+') == std::string::npos &&
                  s.find('-', 1) == std::string::npos && s.front() != '-';
    if (!atomic) s = "(" + s + ")";
    return s + "*";
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool neg = c.is_negative_leading();
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_coeff_prefix(mag) + w.str();
        first = false;
    }
    return out;
}

NcPoly bracket(const NcPoly& p, const NcPoly& q) {
    return p * q - q * p;
}

NcPoly pow(const NcPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    NcPoly r = NcPoly::unit();
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace twistalg
