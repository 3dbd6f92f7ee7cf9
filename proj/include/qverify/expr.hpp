#ifndef QVERIFY_EXPR_HPP
#define QVERIFY_EXPR_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qverify/errors.hpp"

namespace qv {

enum class NodeKind { Number, SymW, SymI, SymQ, Inf, Neg, Add, Sub, Mul, Div, Pow, Call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression AST for the identity language.  Scalars are nonnegative
/// integer literals plus the unit symbols w (a primitive cube root) and I
/// (the fourth root); q is the series variable; calls take semicolon-
/// separated argument groups whose members are comma-separated.
struct Expr {
    NodeKind kind;
    std::int64_t number = 0;   // Number
    std::int64_t exponent = 0; // Pow
    std::string callee;        // Call
    std::vector<std::vector<ExprPtr>> groups;
    ExprPtr a;
    ExprPtr b;
    int pos = 0; // byte offset into the source, for diagnostics

    static ExprPtr make(NodeKind k, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->pos = pos;
        return e;
    }
    static ExprPtr number_lit(std::int64_t v, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = NodeKind::Number;
        e->number = v;
        e->pos = pos;
        return e;
    }
    static ExprPtr unary(NodeKind k, ExprPtr child, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(child);
        e->pos = pos;
        return e;
    }
    static ExprPtr binary(NodeKind k, ExprPtr lhs, ExprPtr rhs, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(lhs);
        e->b = std::move(rhs);
        e->pos = pos;
        return e;
    }
    static ExprPtr pow(ExprPtr base, std::int64_t exp, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = NodeKind::Pow;
        e->a = std::move(base);
        e->exponent = exp;
        e->pos = pos;
        return e;
    }
    static ExprPtr call(std::string name, std::vector<std::vector<ExprPtr>> groups, int pos = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = NodeKind::Call;
        e->callee = std::move(name);
        e->groups = std::move(groups);
        e->pos = pos;
        return e;
    }
};

inline bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return x == y;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case NodeKind::Number: return x->number == y->number;
        case NodeKind::SymW:
        case NodeKind::SymI:
        case NodeKind::SymQ:
        case NodeKind::Inf: return true;
        case NodeKind::Neg: return expr_equal(x->a, y->a);
        case NodeKind::Pow: return x->exponent == y->exponent && expr_equal(x->a, y->a);
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: return expr_equal(x->a, y->a) && expr_equal(x->b, y->b);
        case NodeKind::Call: {
            if (x->callee != y->callee || x->groups.size() != y->groups.size()) return false;
            for (std::size_t g = 0; g < x->groups.size(); ++g) {
                if (x->groups[g].size() != y->groups[g].size()) return false;
                for (std::size_t i = 0; i < x->groups[g].size(); ++i)
                    if (!expr_equal(x->groups[g][i], y->groups[g][i])) return false;
            }
            return true;
        }
    }
    return false;
}

/// One parsed statement of an identity file: `name : LHS == RHS [@ order]`.
struct IdentityStmt {
    std::string name;
    ExprPtr lhs;
    ExprPtr rhs;
    std::optional<std::int64_t> order;
};

namespace detail {

struct Token {
    enum Type {
        Number,
        Ident,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        Comma,
        Semi,
        EqEq,
        At,
        Colon,
        End
    } type;
    std::string text;
    std::int64_t value = 0;
    int pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        int line = 1, col = 1;
        for (int i = 0; i < tok_.pos && i < static_cast<int>(src_.size()); ++i) {
            if (src_[static_cast<std::size_t>(i)] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        const std::string got = tok_.type == Token::End ? "end of input" : "'" + tok_.text + "'";
        throw ParseError("expected " + expected + ", got " + got + " at " +
                             std::to_string(line) + ":" + std::to_string(col),
                         line, col);
    }

  private:
    void advance() {
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' || src_[i_] == '\r' ||
                                    src_[i_] == '\n'))
            ++i_;
        tok_ = Token{Token::End, "", 0, static_cast<int>(i_)};
        if (i_ >= src_.size()) return;
        const char c = src_[i_];
        const int pos = static_cast<int>(i_);
        auto simple = [&](Token::Type t) {
            tok_ = Token{t, std::string(1, c), 0, pos};
            ++i_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                if (v > (std::int64_t(1) << 56))
                    throw ParseError("integer literal too large", 0, pos);
                v = v * 10 + (src_[j] - '0');
                ++j;
            }
            tok_ = Token{Token::Number, std::string(src_.substr(i_, j - i_)), v, pos};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = Token{Token::Ident, std::string(src_.substr(i_, j - i_)), 0, pos};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': simple(Token::Plus); return;
            case '-': simple(Token::Minus); return;
            case '*': simple(Token::Star); return;
            case '/': simple(Token::Slash); return;
            case '^': simple(Token::Caret); return;
            case '(': simple(Token::LParen); return;
            case ')': simple(Token::RParen); return;
            case ',': simple(Token::Comma); return;
            case ';': simple(Token::Semi); return;
            case '@': simple(Token::At); return;
            case ':': simple(Token::Colon); return;
            case '=':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '=') {
                    tok_ = Token{Token::EqEq, "==", 0, pos};
                    i_ += 2;
                    return;
                }
                throw ParseError("single '=' (use '==')", 0, pos);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", 0, pos);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ExprPtr parse_full() {
        ExprPtr e = expression();
        if (lex_.peek().type != Token::End) lex_.fail("end of input");
        return e;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
            const Token op = lex_.next();
            e = Expr::binary(op.type == Token::Plus ? NodeKind::Add : NodeKind::Sub, e, term(),
                             op.pos);
        }
        return e;
    }

    const Token& peek() const { return lex_.peek(); }
    Token take() { return lex_.next(); }
    [[noreturn]] void fail(const std::string& expected) { lex_.fail(expected); }

  private:
    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.peek().type == Token::Star || lex_.peek().type == Token::Slash) {
            const Token op = lex_.next();
            e = Expr::binary(op.type == Token::Star ? NodeKind::Mul : NodeKind::Div, e, factor(),
                             op.pos);
        }
        return e;
    }

    ExprPtr factor() {
        if (lex_.peek().type == Token::Minus) {
            const Token op = lex_.next();
            return Expr::unary(NodeKind::Neg, factor(), op.pos);
        }
        ExprPtr e = primary();
        if (lex_.peek().type == Token::Caret) {
            const Token op = lex_.next();
            std::int64_t sign = 1;
            if (lex_.peek().type == Token::Minus) {
                lex_.next();
                sign = -1;
            }
            if (lex_.peek().type != Token::Number) lex_.fail("integer exponent");
            const Token n = lex_.next();
            e = Expr::pow(e, sign * n.value, op.pos);
        }
        return e;
    }

    ExprPtr primary() {
        const Token t = lex_.peek();
        switch (t.type) {
            case Token::Number:
                lex_.next();
                return Expr::number_lit(t.value, t.pos);
            case Token::LParen: {
                lex_.next();
                ExprPtr e = expression();
                if (lex_.peek().type != Token::RParen) lex_.fail("')'");
                lex_.next();
                return e;
            }
            case Token::Ident: {
                lex_.next();
                if (lex_.peek().type == Token::LParen) {
                    lex_.next();
                    std::vector<std::vector<ExprPtr>> groups;
                    groups.emplace_back();
                    for (;;) {
                        groups.back().push_back(expression());
                        const Token sep = lex_.peek();
                        if (sep.type == Token::Comma) {
                            lex_.next();
                            continue;
                        }
                        if (sep.type == Token::Semi) {
                            lex_.next();
                            groups.emplace_back();
                            continue;
                        }
                        if (sep.type == Token::RParen) {
                            lex_.next();
                            break;
                        }
                        lex_.fail("',', ';' or ')'");
                    }
                    return Expr::call(t.text, std::move(groups), t.pos);
                }
                if (t.text == "w") return Expr::make(NodeKind::SymW, t.pos);
                if (t.text == "I") return Expr::make(NodeKind::SymI, t.pos);
                if (t.text == "q") return Expr::make(NodeKind::SymQ, t.pos);
                if (t.text == "inf") return Expr::make(NodeKind::Inf, t.pos);
                throw ParseError("unknown name '" + t.text + "'", 0, t.pos);
            }
            default: lex_.fail("a number, symbol, call or '('");
        }
    }

    Lexer lex_;
};

} // namespace detail

/// Parses a single expression; the whole input must be consumed.
inline ExprPtr parse_expr(std::string_view text) {
    detail::Parser p(text);
    return p.parse_full();
}

/// Parses `LHS == RHS` into a pair.
inline std::pair<ExprPtr, ExprPtr> parse_equation(std::string_view text) {
    detail::Parser p(text);
    ExprPtr lhs = p.expression();
    if (p.peek().type != detail::Token::EqEq) p.fail("'=='");
    p.take();
    ExprPtr rhs = p.expression();
    if (p.peek().type != detail::Token::End) p.fail("end of input");
    return {lhs, rhs};
}

/// Parses an identity file: one `name : LHS == RHS [@ order]` statement per
/// line, `#` comments, blank lines ignored.  Names must be unique.
inline std::vector<IdentityStmt> parse_identity_file(std::string_view text) {
    std::vector<IdentityStmt> out;
    std::size_t start = 0;
    int lineno = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        start = end + 1;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("missing ':' after identity name", lineno, 1);
        std::string name(line.substr(0, colon));
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        if (name.empty()) throw ParseError("empty identity name", lineno, 1);

        detail::Parser p(line.substr(colon + 1));
        IdentityStmt stmt;
        stmt.name = name;
        stmt.lhs = p.expression();
        if (p.peek().type != detail::Token::EqEq) p.fail("'=='");
        p.take();
        stmt.rhs = p.expression();
        if (p.peek().type == detail::Token::At) {
            p.take();
            if (p.peek().type != detail::Token::Number) p.fail("order after '@'");
            stmt.order = p.take().value;
        }
        if (p.peek().type != detail::Token::End) p.fail("end of line");
        for (const auto& prev : out)
            if (prev.name == stmt.name)
                throw ParseError("duplicate identity name '" + stmt.name + "'", lineno, 1);
        out.push_back(std::move(stmt));
    }
    return out;
}

namespace detail {

// Precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5.
inline int precedence(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Neg: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

inline void render_into(const ExprPtr& e, std::string& out, int min_level);

inline void render_child(const ExprPtr& e, std::string& out, int min_level) {
    if (precedence(*e) < min_level) {
        out += "(";
        render_into(e, out, 0);
        out += ")";
    } else {
        render_into(e, out, 0);
    }
}

inline void render_into(const ExprPtr& e, std::string& out, int) {
    switch (e->kind) {
        case NodeKind::Number: out += std::to_string(e->number); return;
        case NodeKind::SymW: out += "w"; return;
        case NodeKind::SymI: out += "I"; return;
        case NodeKind::SymQ: out += "q"; return;
        case NodeKind::Inf: out += "inf"; return;
        case NodeKind::Neg:
            out += "-";
            render_child(e->a, out, 3);
            return;
        case NodeKind::Add:
            render_child(e->a, out, 1);
            out += " + ";
            render_child(e->b, out, 2);
            return;
        case NodeKind::Sub:
            render_child(e->a, out, 1);
            out += " - ";
            render_child(e->b, out, 2);
            return;
        case NodeKind::Mul:
            render_child(e->a, out, 2);
            out += "*";
            render_child(e->b, out, 3);
            return;
        case NodeKind::Div:
            render_child(e->a, out, 2);
            out += "/";
            render_child(e->b, out, 3);
            return;
        case NodeKind::Pow:
            render_child(e->a, out, 5);
            out += "^";
            out += std::to_string(e->exponent);
            return;
        case NodeKind::Call: {
            out += e->callee;
            out += "(";
            for (std::size_t g = 0; g < e->groups.size(); ++g) {
                if (g) out += "; ";
                for (std::size_t i = 0; i < e->groups[g].size(); ++i) {
                    if (i) out += ", ";
                    render_into(e->groups[g][i], out, 0);
                }
            }
            out += ")";
            return;
        }
    }
}

} // namespace detail

/// Renders an AST back to source text; parse(render(e)) is structurally
/// equal to e.
inline std::string render(const ExprPtr& e) {
    std::string out;
    detail::render_into(e, out, 0);
    return out;
}

} // namespace qv

#endif
