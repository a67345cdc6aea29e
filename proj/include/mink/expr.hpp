#pragma once

// A small expression language for parametric curve components: one variable
// `v`, the constants `pi` and `e`, the elementary functions of jet.hpp, and
// the operators + - * / ^ with the usual precedence. `^` is right
// associative and a leading `-` applies to the whole power, so -v^2 parses
// as -(v^2).
//
// Grammar:
//   expr    := term (("+"|"-") term)*
//   term    := factor (("*"|"/") factor)*
//   factor  := "-" factor | primary ("^" factor)?
//   primary := NUMBER | "v" | "pi" | "e" | FUNC "(" expr ")" | "(" expr ")"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>

#include "mink/errors.hpp"
#include "mink/format.hpp"
#include "mink/jet.hpp"

namespace mink {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Neg, Sin, Cos, Sinh, Cosh, Tan, Tanh, Exp, Ln, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Expr {
    enum class Kind { Number, Variable, Unary, Binary };

    Kind kind;
    double number = 0.0;       // Kind::Number
    UnaryOp uop = UnaryOp::Neg; // Kind::Unary
    BinaryOp bop = BinaryOp::Add; // Kind::Binary
    ExprPtr a, b;
};

inline ExprPtr make_number(double x) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->number = x;
    return e;
}

inline ExprPtr make_variable() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Variable;
    return e;
}

inline ExprPtr make_unary(UnaryOp op, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unary;
    e->uop = op;
    e->a = std::move(child);
    return e;
}

inline ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->bop = op;
    e->a = std::move(lhs);
    e->b = std::move(rhs);
    return e;
}

inline bool structurally_equal(const ExprPtr& lhs, const ExprPtr& rhs) {
    if (!lhs || !rhs) return lhs == rhs;
    if (lhs->kind != rhs->kind) return false;
    switch (lhs->kind) {
        case Expr::Kind::Number: return lhs->number == rhs->number;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Unary:
            return lhs->uop == rhs->uop && structurally_equal(lhs->a, rhs->a);
        case Expr::Kind::Binary:
            return lhs->bop == rhs->bop && structurally_equal(lhs->a, rhs->a)
                && structurally_equal(lhs->b, rhs->b);
    }
    return false;
}

inline Jet3 eval_expr(const ExprPtr& e, const Jet3& v) {
    switch (e->kind) {
        case Expr::Kind::Number: return jet_constant(e->number);
        case Expr::Kind::Variable: return v;
        case Expr::Kind::Unary: {
            const Jet3 c = eval_expr(e->a, v);
            switch (e->uop) {
                case UnaryOp::Neg: return -c;
                case UnaryOp::Sin: return jet_apply(Fn::Sin, c);
                case UnaryOp::Cos: return jet_apply(Fn::Cos, c);
                case UnaryOp::Sinh: return jet_apply(Fn::Sinh, c);
                case UnaryOp::Cosh: return jet_apply(Fn::Cosh, c);
                case UnaryOp::Tan: return jet_apply(Fn::Tan, c);
                case UnaryOp::Tanh: return jet_apply(Fn::Tanh, c);
                case UnaryOp::Exp: return jet_apply(Fn::Exp, c);
                case UnaryOp::Ln: return jet_apply(Fn::Ln, c);
                case UnaryOp::Sqrt: return jet_apply(Fn::Sqrt, c);
            }
            break;
        }
        case Expr::Kind::Binary: {
            const Jet3 l = eval_expr(e->a, v);
            const Jet3 r = eval_expr(e->b, v);
            switch (e->bop) {
                case BinaryOp::Add: return l + r;
                case BinaryOp::Sub: return l - r;
                case BinaryOp::Mul: return l * r;
                case BinaryOp::Div: return l / r;
                case BinaryOp::Pow: return jet_pow(l, r);
            }
            break;
        }
    }
    throw DomainError("malformed expression node");
}

// Plain value evaluation (no derivative propagation).
inline double eval_expr_value(const ExprPtr& e, double v) {
    return eval_expr(e, jet_constant(v)).c0;
}

// Fully parenthesized form; parsing it back yields a structurally identical
// tree for any parser-produced AST.
inline std::string serialize_expr(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Number: return format_double(e->number);
        case Expr::Kind::Variable: return "v";
        case Expr::Kind::Unary: {
            const std::string inner = serialize_expr(e->a);
            if (e->uop == UnaryOp::Neg) return "(-" + inner + ")";
            Fn f;
            switch (e->uop) {
                case UnaryOp::Sin: f = Fn::Sin; break;
                case UnaryOp::Cos: f = Fn::Cos; break;
                case UnaryOp::Sinh: f = Fn::Sinh; break;
                case UnaryOp::Cosh: f = Fn::Cosh; break;
                case UnaryOp::Tan: f = Fn::Tan; break;
                case UnaryOp::Tanh: f = Fn::Tanh; break;
                case UnaryOp::Exp: f = Fn::Exp; break;
                case UnaryOp::Ln: f = Fn::Ln; break;
                case UnaryOp::Sqrt: f = Fn::Sqrt; break;
                default: f = Fn::Sin; break;
            }
            return std::string(fn_name(f)) + "(" + inner + ")";
        }
        case Expr::Kind::Binary: {
            char op;
            switch (e->bop) {
                case BinaryOp::Add: op = '+'; break;
                case BinaryOp::Sub: op = '-'; break;
                case BinaryOp::Mul: op = '*'; break;
                case BinaryOp::Div: op = '/'; break;
                case BinaryOp::Pow: op = '^'; break;
                default: op = '+'; break;
            }
            return "(" + serialize_expr(e->a) + op + serialize_expr(e->b) + ")";
        }
    }
    return "";
}

namespace detail {

struct Token {
    enum class Type { Number, Ident, Op, End };
    Type type = Type::End;
    double number = 0.0;
    std::string_view ident;
    char op = 0;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.type = Token::Type::Ident;
            tok_.ident = text_.substr(start, pos_ - start);
            return;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '('
            || c == ')') {
            tok_.type = Token::Type::Op;
            tok_.op = c;
            ++pos_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void lex_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size()
                   && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ - start == 1 && text_[start] == '.')
            throw ParseError("expected digits in number", start);
        // optional exponent, only when digits actually follow
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size()
                       && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        const std::string_view s = text_.substr(start, pos_ - start);
        double value = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw ParseError("malformed number '" + std::string(s) + "'", start);
        tok_.type = Token::Type::Number;
        tok_.number = value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError("expected end of input", t.offset);
        return e;
    }

private:
    bool peek_op(char c) const {
        const Token& t = lex_.peek();
        return t.type == Token::Type::Op && t.op == c;
    }

    void expect_op(char c) {
        const Token& t = lex_.peek();
        if (t.type != Token::Type::Op || t.op != c)
            throw ParseError(std::string("expected '") + c + "'", t.offset);
        lex_.take();
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek_op('+') || peek_op('-')) {
            const char op = lex_.take().op;
            ExprPtr rhs = parse_term();
            lhs = make_binary(op == '+' ? BinaryOp::Add : BinaryOp::Sub,
                              std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek_op('*') || peek_op('/')) {
            const char op = lex_.take().op;
            ExprPtr rhs = parse_factor();
            lhs = make_binary(op == '*' ? BinaryOp::Mul : BinaryOp::Div,
                              std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    // A leading '-' wraps the whole power: -v^2 == -(v^2), v^-2 == v^(-2).
    ExprPtr parse_factor() {
        if (peek_op('-')) {
            lex_.take();
            return make_unary(UnaryOp::Neg, parse_factor());
        }
        ExprPtr base = parse_primary();
        if (peek_op('^')) {
            lex_.take();
            return make_binary(BinaryOp::Pow, std::move(base), parse_factor());
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token t = lex_.take();
        switch (t.type) {
            case Token::Type::Number:
                return make_number(t.number);
            case Token::Type::Ident: {
                if (t.ident == "v") return make_variable();
                if (t.ident == "pi") return make_number(std::numbers::pi);
                if (t.ident == "e") return make_number(std::numbers::e);
                UnaryOp op;
                if (t.ident == "sin") op = UnaryOp::Sin;
                else if (t.ident == "cos") op = UnaryOp::Cos;
                else if (t.ident == "sinh") op = UnaryOp::Sinh;
                else if (t.ident == "cosh") op = UnaryOp::Cosh;
                else if (t.ident == "tan") op = UnaryOp::Tan;
                else if (t.ident == "tanh") op = UnaryOp::Tanh;
                else if (t.ident == "exp") op = UnaryOp::Exp;
                else if (t.ident == "ln") op = UnaryOp::Ln;
                else if (t.ident == "sqrt") op = UnaryOp::Sqrt;
                else
                    throw ParseError("unknown identifier '" + std::string(t.ident) + "'",
                                     t.offset);
                expect_op('(');
                ExprPtr arg = parse_expr();
                expect_op(')');
                return make_unary(op, std::move(arg));
            }
            case Token::Type::Op:
                if (t.op == '(') {
                    ExprPtr e = parse_expr();
                    expect_op(')');
                    return e;
                }
                throw ParseError(std::string("expected a value, found '") + t.op + "'",
                                 t.offset);
            case Token::Type::End:
                throw ParseError("expected a value, found end of input", t.offset);
        }
        throw ParseError("expected a value", t.offset);
    }

    Lexer lex_;
};

} // namespace detail

inline ExprPtr parse_expression(std::string_view text) {
    return detail::Parser(text).parse();
}

} // namespace mink
