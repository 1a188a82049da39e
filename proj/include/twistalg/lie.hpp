#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twistalg/rewrite.hpp"

namespace twistalg {

struct RootOfUnityParam : std::runtime_error {
    RootOfUnityParam()
        : std::runtime_error("Lie operations require that m is not a root of unity (m != -1)") {}
};

struct NotLiePolynomial : std::runtime_error {
    explicit NotLiePolynomial(const std::string& complement)
        : std::runtime_error("not a Lie polynomial; complement part: " + complement) {}
};

/// Immutable binary bracket tree with leaves A and B; [x,y] at the nodes.
class BracketTree {
public:
    static BracketTree leaf(Letter l);
    static BracketTree node(BracketTree left, BracketTree right);

    bool is_leaf() const;
    Letter letter() const;  // leaves only
    BracketTree left() const;
    BracketTree right() const;

    std::string str() const;  // "A" or "[A,[A,B]]"

private:
    struct Node;
    explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Scalar-linear combination of bracket trees; by construction it always
/// denotes a Lie polynomial in A and B.
class LieExpr {
public:
    using Term = std::pair<Scalar, BracketTree>;

    LieExpr() = default;
    static LieExpr tree(BracketTree t, const Scalar& c = Scalar(1L));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    LieExpr& operator+=(const LieExpr& o);
    LieExpr operator*(const Scalar& c) const;

    /// Wraps every tree as [l, tree].
    LieExpr adjoint(Letter l) const;

    /// Rendered with scalar prefixes, re-parseable by parse().
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Normal form of the interpreted bracket expression.
NcPoly expand(const Rewriter& rw, const LieExpr& e);

/// Normal form of (ad X)^k applied to Y.
NcPoly ad_power(const Rewriter& rw, const NcPoly& x, int k, const NcPoly& y);

/// Split of a normal form into the bracket-generated part (words A, B, C^k,
/// C^kA^l, B^lC^k) and its complement (words I, A^n, B^n with n >= 2).
struct Decomposition {
    NcPoly lie_part;
    NcPoly complement_part;
};

Decomposition decompose(const Rewriter& rw, const NcPoly& p);  // throws RootOfUnityParam
bool is_lie_polynomial(const Rewriter& rw, const NcPoly& p);

/// Constructive bracket expression for a Lie polynomial: expand(witness(p))
/// equals decompose(p).lie_part. Throws NotLiePolynomial otherwise.
LieExpr witness(const Rewriter& rw, const NcPoly& p);

/// Bracket-closure oracle: grows the span of {A, B} under bracketing,
/// keeping only elements of filtration degree <= max_degree, until no new
/// independent element appears; compares with the predicted basis
/// {A, B} u {C^k : 2k <= D} u {C^kA^l, B^lC^k : 2k+l <= D, k,l >= 1}.
struct ClosureReport {
    int max_degree = 0;
    std::vector<NcPoly> computed_basis;
    std::vector<NcPoly> predicted_basis;
    bool spans_equal = false;
};

/// Degrees outside [1, kMaxClosureDegree] are rejected; the span dimension
/// grows quadratically with the degree.
inline constexpr int kMaxClosureDegree = 32;

ClosureReport lie_closure(const Rewriter& rw, int max_degree);

/// The predicted basis words alone (each as a single-word polynomial).
std::vector<NcPoly> predicted_lie_basis(int max_degree);

}  // namespace twistalg
