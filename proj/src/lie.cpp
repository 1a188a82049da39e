#include "twistalg/lie.hpp"

#include <map>
#include <stdexcept>

#include "twistalg/span.hpp"

namespace twistalg {

struct BracketTree::Node {
    bool leaf;
    Letter letter;
    std::shared_ptr<const Node> left, right;
};

BracketTree BracketTree::leaf(Letter l) {
    if (l == Letter::C) throw std::invalid_argument("bracket trees have leaves A and B only");
    return BracketTree(std::make_shared<Node>(Node{true, l, nullptr, nullptr}));
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
    return BracketTree(std::make_shared<Node>(
        Node{false, Letter::A, std::move(left.node_), std::move(right.node_)}));
}

bool BracketTree::is_leaf() const { return node_->leaf; }

Letter BracketTree::letter() const {
    if (!node_->leaf) throw std::logic_error("letter() on an inner node");
    return node_->letter;
}

BracketTree BracketTree::left() const {
    if (node_->leaf) throw std::logic_error("left() on a leaf");
    return BracketTree(node_->left);
}

BracketTree BracketTree::right() const {
    if (node_->leaf) throw std::logic_error("right() on a leaf");
    return BracketTree(node_->right);
}

std::string BracketTree::str() const {
    if (node_->leaf) return std::string(1, char(node_->letter));
    return "[" + BracketTree(node_->left).str() + "," + BracketTree(node_->right).str() + "]";
}

LieExpr LieExpr::tree(BracketTree t, const Scalar& c) {
    LieExpr e;
    if (!c.is_zero()) e.terms_.emplace_back(c, std::move(t));
    return e;
}

LieExpr& LieExpr::operator+=(const LieExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

LieExpr LieExpr::operator*(const Scalar& c) const {
    LieExpr e;
    if (c.is_zero()) return e;
    for (const auto& [coeff, t] : terms_) e.terms_.emplace_back(coeff * c, t);
    return e;
}

LieExpr LieExpr::adjoint(Letter l) const {
    LieExpr e;
    for (const auto& [coeff, t] : terms_)
        e.terms_.emplace_back(coeff, BracketTree::node(BracketTree::leaf(l), t));
    return e;
}

std::string LieExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, t] : terms_) {
        bool neg = c.is_negative_leading();
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_coeff_prefix(mag) + t.str();
        first = false;
    }
    return out;
}

NcPoly expand(const Rewriter& rw, const LieExpr& e) {
    NcPoly acc;
    for (const auto& [c, t] : e.terms()) {
        // Trees are expanded leaf-first with a normal form at every node;
        // multiplicativity of the normal form makes this equal to expanding
        // in the free algebra first.
        struct Walk {
            const Rewriter& rw;
            NcPoly run(const BracketTree& t) {
                if (t.is_leaf()) return NcPoly::letter(t.letter());
                return rw.normal_form(bracket(run(t.left()), run(t.right())));
            }
        } walk{rw};
        acc += walk.run(t) * c;
    }
    return rw.normal_form(acc);
}

NcPoly ad_power(const Rewriter& rw, const NcPoly& x, int k, const NcPoly& y) {
    if (k < 0) throw std::invalid_argument("ad_power needs k >= 0");
    NcPoly cur = rw.normal_form(y);
    for (int i = 0; i < k; ++i) cur = rw.normal_form(bracket(x, cur));
    return cur;
}

namespace {

void require_lie_ok(const Rewriter& rw) {
    if (!rw.params().lie_ok()) throw RootOfUnityParam();
}

// Complement words are I, A^n and B^n with n >= 2.
bool is_complement_word(const Word& w) {
    if (w.empty()) return true;
    if (w.size() < 2) return false;
    char first = w.ch(0);
    if (first != 'A' && first != 'B') return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w.ch(i) != first) return false;
    return true;
}

}  // namespace

Decomposition decompose(const Rewriter& rw, const NcPoly& p) {
    require_lie_ok(rw);
    Decomposition d;
    const NcPoly nf = rw.normal_form(p);
    for (const auto& [w, c] : nf.terms()) {
        if (is_complement_word(w))
            d.complement_part.add_term(w, c);
        else
            d.lie_part.add_term(w, c);
    }
    return d;
}

bool is_lie_polynomial(const Rewriter& rw, const NcPoly& p) {
    return decompose(rw, p).complement_part.is_zero();
}

namespace {

class WitnessBuilder {
public:
    explicit WitnessBuilder(const Rewriter& rw) : rw_(rw) {}

    LieExpr for_word(const Word& w) {
        int n_b = 0, n_c = 0, n_a = 0;
        size_t i = 0;
        while (i < w.size() && w.ch(i) == 'B') ++n_b, ++i;
        while (i < w.size() && w.ch(i) == 'C') ++n_c, ++i;
        while (i < w.size() && w.ch(i) == 'A') ++n_a, ++i;
        if (i != w.size() || (n_b > 0 && n_a > 0))
            throw std::logic_error("not a bracket-part basis word: " + w.str());
        if (n_c == 0) {
            if (n_a == 1 && n_b == 0) return LieExpr::tree(BracketTree::leaf(Letter::A));
            if (n_b == 1 && n_a == 0) return LieExpr::tree(BracketTree::leaf(Letter::B));
            throw std::logic_error("not a bracket-part basis word: " + w.str());
        }
        if (n_a > 0) {
            // C^k A^l = (m^k - 1)^{-l} (ad A)^l (C^k)
            LieExpr e = power_of_c(n_c);
            for (int j = 0; j < n_a; ++j) e = e.adjoint(Letter::A);
            return e * (rw_.params().m_power(n_c) - Scalar(1L)).pow(-n_a);
        }
        if (n_b > 0) {
            // B^l C^k = (1 - m^k)^{-l} (ad B)^l (C^k)
            LieExpr e = power_of_c(n_c);
            for (int j = 0; j < n_b; ++j) e = e.adjoint(Letter::B);
            return e * (Scalar(1L) - rw_.params().m_power(n_c)).pow(-n_b);
        }
        return power_of_c(n_c);
    }

private:
    const Rewriter& rw_;
    std::map<int, LieExpr> c_memo_;

    // C as a bracket: [A,B].
    static BracketTree c_tree() {
        return BracketTree::node(BracketTree::leaf(Letter::A), BracketTree::leaf(Letter::B));
    }

    // C^j from the recursion
    //   (1 - m^j) C^j = (1 - m^{j-1}) b C^{j-1}
    //                   - m^{j-1} (1-m)^{2-j} [B, (ad C)^{j-1}(A)].
    LieExpr power_of_c(int j) {
        auto it = c_memo_.find(j);
        if (it != c_memo_.end()) return it->second;
        LieExpr result;
        if (j == 1) {
            result = LieExpr::tree(c_tree());
        } else {
            const TwistParams& params = rw_.params();
            const Scalar lead_inv = (Scalar(1L) - params.m_power(j)).inv();
            BracketTree chain = BracketTree::leaf(Letter::A);
            for (int i = 0; i < j - 1; ++i) chain = BracketTree::node(c_tree(), chain);
            chain = BracketTree::node(BracketTree::leaf(Letter::B), chain);
            const Scalar one_minus_m = Scalar(1L) - params.m();
            const Scalar chain_coeff = -(params.m_power(j - 1) * one_minus_m.pow(2 - j));
            result = power_of_c(j - 1) * ((Scalar(1L) - params.m_power(j - 1)) * params.b() * lead_inv);
            result += LieExpr::tree(chain, chain_coeff * lead_inv);
        }
        c_memo_.emplace(j, result);
        return result;
    }
};

}  // namespace

LieExpr witness(const Rewriter& rw, const NcPoly& p) {
    require_lie_ok(rw);
    Decomposition d = decompose(rw, p);
    if (!d.complement_part.is_zero()) throw NotLiePolynomial(d.complement_part.str());
    WitnessBuilder builder(rw);
    LieExpr out;
    for (const auto& [w, c] : d.lie_part.terms()) out += builder.for_word(w) * c;
    return out;
}

std::vector<NcPoly> predicted_lie_basis(int max_degree) {
    std::vector<NcPoly> out;
    out.push_back(NcPoly::letter(Letter::A));
    out.push_back(NcPoly::letter(Letter::B));
    for (int k = 1; 2 * k <= max_degree; ++k) {
        out.push_back(NcPoly::term(Word::run(Letter::C, k)));
        for (int l = 1; 2 * k + l <= max_degree; ++l) {
            out.push_back(NcPoly::term(Word::run(Letter::C, k) * Word::run(Letter::A, l)));
            out.push_back(NcPoly::term(Word::run(Letter::B, l) * Word::run(Letter::C, k)));
        }
    }
    return out;
}

ClosureReport lie_closure(const Rewriter& rw, int max_degree) {
    require_lie_ok(rw);
    if (max_degree < 1 || max_degree > kMaxClosureDegree)
        throw std::invalid_argument("lie_closure degree must be in [1, " +
                                    std::to_string(kMaxClosureDegree) + "]");

    ClosureReport report;
    report.max_degree = max_degree;

    SpanSolver span;
    span.insert(rw.normal_form(NcPoly::letter(Letter::A)));
    span.insert(rw.normal_form(NcPoly::letter(Letter::B)));

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<NcPoly> basis = span.basis();
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = i + 1; j < basis.size(); ++j) {
                NcPoly v = rw.normal_form(bracket(basis[i], basis[j]));
                if (v.is_zero() || v.degree() > max_degree) continue;
                if (!span.contains(v)) {
                    span.insert(v);
                    grew = true;
                }
            }
        }
    }

    report.computed_basis = span.basis();
    report.predicted_basis = predicted_lie_basis(max_degree);

    SpanSolver predicted;
    for (const NcPoly& v : report.predicted_basis) predicted.insert(v);

    bool equal = true;
    for (const NcPoly& v : report.computed_basis)
        if (!predicted.contains(v)) equal = false;
    for (const NcPoly& v : report.predicted_basis)
        if (!span.contains(v)) equal = false;
    report.spans_equal = equal;
    return report;
}

}  // namespace twistalg
