#include <qmobius/parse.hpp>
#include <qmobius/sphere.hpp>

#include <cctype>
#include <vector>

namespace qmobius {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Times, Divide, Caret, LParen, RParen, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
            out.push_back({Token::Number, num, start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) id += s[i++];
            out.push_back({Token::Ident, id, start});
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Times; break;
                case '/': k = Token::Divide; break;
                case '^': k = Token::Caret; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

class Parser {
public:
    Parser(const EngineContext& ctx, const std::string& text, Algebra algebra)
        : ctx_(ctx), algebra_(algebra), tokens_(tokenize(text)) {}

    Element parse() {
        Element e = parse_expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    const EngineContext& ctx_;
    Algebra algebra_;
    std::vector<Token> tokens_;
    size_t at_ = 0;

    const Presentation& pres() const {
        return algebra_ == Algebra::Funq ? *ctx_.funq : *ctx_.uq;
    }
    const Token& peek() const { return tokens_[at_]; }
    Token next() { return tokens_[at_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + what, peek().pos);
        ++at_;
    }

    Element parse_expr() {
        bool neg = false;
        if (peek().kind == Token::Minus) {
            neg = true;
            ++at_;
        }
        Element acc = parse_term();
        if (neg) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            Element t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Element parse_term() {
        Element acc = parse_factor();
        while (peek().kind == Token::Times || peek().kind == Token::Divide) {
            bool divide = next().kind == Token::Divide;
            size_t pos = peek().pos;
            Element f = parse_factor();
            if (divide) {
                Scalar d = as_scalar(f, pos);
                if (d.is_zero()) throw ParseError("division by zero", pos);
                acc = d.inverse() * acc;
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    Scalar as_scalar(const Element& e, size_t pos) const {
        if (e.is_zero()) return Scalar();
        if (e.term_count() != 1 || e.terms().begin()->first != ExpVec{})
            throw ParseError("division is only defined by scalar expressions", pos);
        return e.terms().begin()->second;
    }

    Element parse_factor() {
        Element base = parse_atom();
        if (peek().kind == Token::Caret) {
            size_t pos = next().pos;
            long n = parse_exponent(pos, base);
            if (n < 0) {
                Scalar s = as_scalar(base, pos);
                if (s.is_zero()) throw ParseError("zero to a negative power", pos);
                s = s.inverse();
                Element e = Element::unit(pres());
                for (long j = 0; j < -n; ++j) e = s * e;
                return e;
            }
            Element e = Element::unit(pres());
            for (long j = 0; j < n; ++j) e = e * base;
            return e;
        }
        return base;
    }

    // integer, possibly negative, or a parenthesized half-integer "(n/2)";
    // half-integers are only meaningful for q and are applied immediately.
    long parse_exponent(size_t pos, Element& base) {
        bool paren = false;
        if (peek().kind == Token::LParen) {
            paren = true;
            ++at_;
        }
        bool neg = false;
        if (peek().kind == Token::Minus) {
            neg = true;
            ++at_;
        }
        if (peek().kind != Token::Number) throw ParseError("expected integer exponent", peek().pos);
        long n = std::stol(next().text);
        if (neg) n = -n;
        if (paren) {
            if (peek().kind == Token::Divide) {
                ++at_;
                if (peek().kind != Token::Number || peek().text != "2")
                    throw ParseError("only half-integer exponents n/2 are supported", peek().pos);
                ++at_;
                expect(Token::RParen, "')'");
                Scalar s = as_scalar(base, pos);
                if (s != Scalar::q())
                    throw ParseError("half-integer exponents apply to q only", pos);
                base = Element::unit(pres(), Scalar::q_half(n));
                return 1;
            }
            expect(Token::RParen, "')'");
        }
        return n;
    }

    Element parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Number: {
                long v = std::stol(next().text);
                return Element::unit(pres(), Scalar(static_cast<long long>(v)));
            }
            case Token::LParen: {
                ++at_;
                Element e = parse_expr();
                expect(Token::RParen, "')'");
                return e;
            }
            case Token::Ident:
                return parse_ident();
            default:
                throw ParseError("expected a number, generator or '('", t.pos);
        }
    }

    Element parse_ident() {
        Token t = next();
        const std::string& id = t.text;
        if (id == "star") {
            expect(Token::LParen, "'(' after star");
            Element e = parse_expr();
            expect(Token::RParen, "')'");
            return e.star();
        }
        if (id == "i") return Element::unit(pres(), Scalar::imag());
        if (id == "q") return Element::unit(pres(), Scalar::q());
        if (auto g = pres().gen_by_token(id)) return Element::generator(pres(), *g);
        if (algebra_ == Algebra::Funq) {
            if (id == "A") return sphere_A(ctx_);
            if (id == "B") return sphere_B(ctx_);
            if (id == "Bs") return sphere_Bs(ctx_);
        }
        // unknown generator: suggest the closest valid one
        std::vector<std::string> valid{"q", "i", "star"};
        for (GenId g = 0; g < 4; ++g) valid.push_back(pres().gen(g).token);
        if (algebra_ == Algebra::Funq) {
            valid.push_back("A");
            valid.push_back("B");
            valid.push_back("Bs");
        }
        std::string best;
        size_t best_d = 3;
        for (const auto& v : valid) {
            size_t d = edit_distance(id, v);
            if (d < best_d) {
                best_d = d;
                best = v;
            }
        }
        std::string msg = "unknown generator '" + id + "' in " + pres().name();
        if (!best.empty()) msg += "; did you mean '" + best + "'?";
        throw ParseError(msg, t.pos);
    }
};

} // namespace

Element parse_element(const EngineContext& ctx, const std::string& text, Algebra algebra) {
    return Parser(ctx, text, algebra).parse();
}

} // namespace qmobius
