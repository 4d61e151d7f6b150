#include "bgls/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "bgls/errors.hpp"
#include "bgls/numerics.hpp"

namespace bgls {

namespace {

struct Token {
    enum Kind { ident, number, lparen, rparen, comma, semi, end } kind = end;
    std::string text;
    double num = 0.0;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token peek() {
        if (!has_peek_) {
            peeked_ = lex();
            has_peek_ = true;
        }
        return peeked_;
    }

    Token next() {
        Token t = peek();
        has_peek_ = false;
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.col);
    }

private:
    Token lex() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
        Token t;
        t.line = line_;
        t.col = col_;
        if (i_ >= s_.size()) {
            t.kind = Token::end;
            return t;
        }
        const char c = s_[i_];
        if (c == '(' || c == ')' || c == ',' || c == ';') {
            t.kind = (c == '(') ? Token::lparen
                                : (c == ')') ? Token::rparen
                                             : (c == ',') ? Token::comma : Token::semi;
            t.text = c;
            advance();
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                      s_[i_] == '_')) {
                t.text += s_[i_];
                advance();
            }
            t.kind = Token::ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            const char* start = s_.c_str() + i_;
            char* past = nullptr;
            t.num = std::strtod(start, &past);
            if (past == start) throw ParseError("malformed number", line_, col_);
            for (const char* q = start; q != past; ++q) {
                t.text += *q;
                advance();
            }
            t.kind = Token::number;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token peeked_;
    bool has_peek_ = false;
};

void expect(Lexer& lx, Token::Kind kind, const char* what) {
    Token t = lx.next();
    if (t.kind != kind) lx.fail(std::string("expected ") + what, t);
}

// Number or the identifier "inf".
double number_or_inf(Lexer& lx) {
    Token t = lx.next();
    if (t.kind == Token::number) return t.num;
    if (t.kind == Token::ident && t.text == "inf") return kInf;
    lx.fail("expected a number", t);
}

double plain_number(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::number) lx.fail("expected a number", t);
    return t.num;
}

std::string ident(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::ident) lx.fail("expected a name", t);
    return t.text;
}

Factor1D parse_factor(Lexer& lx) {
    Token head = lx.next();
    if (head.kind != Token::ident || head.text != "factor") lx.fail("expected 'factor'", head);
    expect(lx, Token::lparen, "'('");
    Factor1D f;
    for (;;) {
        Token piece_head = lx.next();
        if (piece_head.kind != Token::ident || piece_head.text != "piece")
            lx.fail("expected 'piece'", piece_head);
        expect(lx, Token::lparen, "'('");
        PowerPiece pp;
        pp.lo = number_or_inf(lx);
        expect(lx, Token::comma, "','");
        pp.hi = number_or_inf(lx);
        expect(lx, Token::comma, "','");
        pp.coef = plain_number(lx);
        expect(lx, Token::comma, "','");
        pp.expnt = plain_number(lx);
        expect(lx, Token::rparen, "')'");
        f.power_pieces.push_back(pp);
        Token t = lx.next();
        if (t.kind == Token::rparen) break;
        if (t.kind != Token::comma) lx.fail("expected ',' or ')'", t);
    }
    return f;
}

ProductFunction parse_function_body(Lexer& lx, const WeightedDomain& dom) {
    std::vector<Factor> factors;
    for (;;) {
        factors.emplace_back(parse_factor(lx));
        if (lx.peek().kind != Token::semi) break;
        lx.next();
    }
    return ProductFunction(dom, std::move(factors));
}

PsiFunction parse_psi_expr(Lexer& lx, const Interval& iv, const WeightedDomain& dom) {
    Token head = lx.next();
    if (head.kind != Token::ident) lx.fail("expected a psi form", head);
    if (head.text == "canonical") return canonical_psi(iv, dom);
    if (head.text == "const") {
        expect(lx, Token::lparen, "'('");
        const double c = plain_number(lx);
        expect(lx, Token::rparen, "')'");
        return PsiFunction::constant(iv, c);
    }
    if (head.text == "power") {
        expect(lx, Token::lparen, "'('");
        const double c = plain_number(lx);
        expect(lx, Token::comma, "','");
        const double ga = plain_number(lx);
        expect(lx, Token::comma, "','");
        const double gb = plain_number(lx);
        expect(lx, Token::rparen, "')'");
        return PsiFunction::power_formula(iv, c, ga, gb);
    }
    if (head.text == "rep") {
        expect(lx, Token::lparen, "'('");
        ProductFunction f = parse_function_body(lx, dom);
        expect(lx, Token::rparen, "')'");
        return PsiFunction::from_representation(std::move(f), iv);
    }
    if (head.text == "prod") {
        expect(lx, Token::lparen, "'('");
        PsiFunction x = parse_psi_expr(lx, iv, dom);
        expect(lx, Token::comma, "','");
        PsiFunction y = parse_psi_expr(lx, iv, dom);
        expect(lx, Token::rparen, "')'");
        return multiply_psi(x, y);
    }
    lx.fail("unknown psi form '" + head.text + "'", head);
}

void expect_end(Lexer& lx) {
    Token t = lx.next();
    if (t.kind != Token::end) lx.fail("trailing input", t);
}

}  // namespace

Interval parse_interval(const std::string& text) {
    Lexer lx(text);
    const double a = plain_number(lx);
    expect(lx, Token::comma, "','");
    const double b = number_or_inf(lx);
    expect_end(lx);
    try {
        return Interval(a, b);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

WeightedDomain parse_blocks(const std::string& text) {
    Lexer lx(text);
    std::vector<BlockSpec> blocks;
    for (;;) {
        Token head = lx.next();
        if (head.kind != Token::ident || head.text != "block") lx.fail("expected 'block'", head);
        expect(lx, Token::lparen, "'('");
        const double dim = plain_number(lx);
        expect(lx, Token::comma, "','");
        const double theta = plain_number(lx);
        Token t = lx.next();
        bool half_space = true;
        if (t.kind == Token::comma) {
            const std::string profile = ident(lx);
            if (profile == "full")
                half_space = false;
            else if (profile != "half")
                lx.fail("block profile must be 'half' or 'full'", t);
            t = lx.next();
        }
        if (t.kind != Token::rparen) lx.fail("expected ')'", t);

        BlockSpec blk;
        blk.dim = static_cast<int>(dim);
        if (blk.dim != dim) throw ParseError("block dim must be an integer", head.line, head.col);
        blk.half_space = half_space;
        if (theta != 0.0) {
            blk.kind = WeightKind::power;
            blk.theta = theta;
            blk.coef = 1.0;
        }
        blocks.push_back(blk);
        if (lx.peek().kind != Token::semi) break;
        lx.next();
    }
    expect_end(lx);
    try {
        return WeightedDomain(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

ProductFunction parse_function(const std::string& text, const WeightedDomain& dom) {
    Lexer lx(text);
    ProductFunction f = parse_function_body(lx, dom);
    expect_end(lx);
    return f;
}

PsiFunction parse_psi(const std::string& text, const Interval& iv, const WeightedDomain& dom) {
    Lexer lx(text);
    PsiFunction psi = parse_psi_expr(lx, iv, dom);
    expect_end(lx);
    return psi;
}

}  // namespace bgls
