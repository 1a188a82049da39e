#include "twistalg/parse.hpp"

#include <cctype>
#include <vector>

namespace twistalg {

namespace {

enum class Tok { Letter, UnitI, VarM, VarB, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    size_t pos;
    std::string text;  // letter name or digits
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            toks.push_back({Tok::Int, i, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case 'A': case 'B': case 'C': kind = Tok::Letter; break;
            case 'I': kind = Tok::UnitI; break;
            case 'm': kind = Tok::VarM; break;
            case 'b': kind = Tok::VarB; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            default:
                throw ParseError(i, "a token", std::string("'") + c + "'");
        }
        toks.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    toks.push_back({Tok::End, s.size(), ""});
    return toks;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    NcPoly run() {
        NcPoly p = parse_expr();
        expect(Tok::End, "'+', '-', '*' or end of input");
        return p;
    }

private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) throw ParseError(peek().pos, what, describe(peek()));
        ++at_;
    }

    static bool starts_atom(Tok k) {
        switch (k) {
            case Tok::Letter: case Tok::UnitI: case Tok::VarM: case Tok::VarB:
            case Tok::Int: case Tok::LParen: case Tok::LBracket:
                return true;
            default:
                return false;
        }
    }

    NcPoly parse_expr() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        NcPoly acc = parse_term();
        if (neg) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            NcPoly t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    NcPoly parse_term() {
        NcPoly acc = parse_factor();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                acc = acc * parse_factor();
            } else if (peek().kind == Tok::Slash) {
                Token slash = take();
                NcPoly d = parse_factor();
                auto s = d.as_scalar();
                if (!s) throw ParseError(slash.pos, "a scalar divisor", "a word expression");
                if (s->is_zero()) throw ParseError(slash.pos, "a nonzero divisor", "zero");
                acc = acc * s->inv();
            } else if (starts_atom(peek().kind)) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    NcPoly parse_factor() {
        NcPoly base = parse_atom();
        if (peek().kind != Tok::Caret) return base;
        Token caret = take();
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        if (peek().kind != Tok::Int)
            throw ParseError(peek().pos, "an integer exponent", describe(peek()));
        Token e = take();
        if (e.text.size() > 6) throw ParseError(e.pos, "a reasonable exponent", "'" + e.text + "'");
        int exp = std::stoi(e.text);
        if (neg) {
            auto s = base.as_scalar();
            if (!s) throw ParseError(caret.pos, "a scalar base for a negative exponent", "a word expression");
            if (s->is_zero()) throw ParseError(caret.pos, "a nonzero base", "zero");
            return NcPoly::constant(s->pow(-exp));
        }
        return pow(base, exp);
    }

    NcPoly parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Letter: {
                Token tok = take();
                return NcPoly::letter(Letter(tok.text[0]));
            }
            case Tok::UnitI:
                take();
                return NcPoly::unit();
            case Tok::VarM:
                take();
                return NcPoly::constant(Scalar::sym_m());
            case Tok::VarB:
                take();
                return NcPoly::constant(Scalar::sym_b());
            case Tok::Int: {
                Token tok = take();
                return NcPoly::constant(Scalar(Rational(mpz_class(tok.text))));
            }
            case Tok::LParen: {
                take();
                NcPoly inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::LBracket: {
                take();
                NcPoly left = parse_expr();
                expect(Tok::Comma, "','");
                NcPoly right = parse_expr();
                expect(Tok::RBracket, "']'");
                return bracket(left, right);
            }
            default:
                throw ParseError(t.pos, "'A', 'B', 'C', 'I', 'm', 'b', a number, '(' or '['",
                                 describe(t));
        }
    }
};

}  // namespace

NcPoly parse(const std::string& text) {
    return Parser(text).run();
}

Rational parse_rational(const std::string& text) {
    NcPoly p = parse(text);
    auto s = p.as_scalar();
    if (!s || !s->is_rational())
        throw std::invalid_argument("not a rational constant: '" + text + "'");
    return s->rational_value();
}

}  // namespace twistalg
