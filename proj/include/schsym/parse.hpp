#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "schsym/poly.hpp"
#include "schsym/rational.hpp"

namespace schsym {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Expression tree for the potential grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := rational | 'i' | 'x'uint | 't' | '(' expr ')'
///   rational := int ('/' uint)?
/// Whitespace is insignificant. The leading unary minus is a superset of
/// the printed forms so that parse(format(p)) = p.
struct ExprAST {
    enum class Kind { Literal, ImagUnit, Var, TVar, Add, Sub, Neg, Mul, Pow };
    Kind kind;
    Rational value;                  // Literal
    int var = 0;                     // Var, 1-based
    unsigned exponent = 0;           // Pow
    std::unique_ptr<ExprAST> lhs, rhs;

    explicit ExprAST(Kind k) : kind(k) {}
};

namespace detail {

class ExprParser {
public:
    /// n < 0 disables the variable-index bound check.
    explicit ExprParser(const std::string& src, int n = -1) : src_(src), n_(n) {}

    std::unique_ptr<ExprAST> parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::unique_ptr<ExprAST> expr() {
        skip_ws();
        std::unique_ptr<ExprAST> lhs;
        if (peek() == '-') {
            ++pos_;
            lhs = std::make_unique<ExprAST>(ExprAST::Kind::Neg);
            lhs->lhs = term();
        } else {
            lhs = term();
        }
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            auto node = std::make_unique<ExprAST>(c == '+' ? ExprAST::Kind::Add
                                                           : ExprAST::Kind::Sub);
            node->lhs = std::move(lhs);
            node->rhs = term();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<ExprAST> term() {
        auto lhs = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            auto node = std::make_unique<ExprAST>(ExprAST::Kind::Mul);
            node->lhs = std::move(lhs);
            node->rhs = factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<ExprAST> factor() {
        auto b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("exponent must be a nonnegative integer", at);
            BigInt e = parse_uint();
            if (e > 10000) throw ParseError("exponent out of range", at);
            auto node = std::make_unique<ExprAST>(ExprAST::Kind::Pow);
            node->exponent = e.convert_to<unsigned>();
            node->lhs = std::move(b);
            return node;
        }
        return b;
    }

    std::unique_ptr<ExprAST> base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == 'i') {
            ++pos_;
            return std::make_unique<ExprAST>(ExprAST::Kind::ImagUnit);
        }
        if (c == 't') {
            ++pos_;
            return std::make_unique<ExprAST>(ExprAST::Kind::TVar);
        }
        if (c == 'x') {
            size_t at = pos_;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected variable index after 'x'", at);
            BigInt idx = parse_uint();
            if (idx < 1) throw ParseError("variable index must be >= 1", at);
            if (n_ >= 0 && idx > n_)
                throw ParseError("variable x" + idx.str() + " exceeds dimension " +
                                     std::to_string(n_),
                                 at);
            if (idx > 1000) throw ParseError("variable index out of range", at);
            auto node = std::make_unique<ExprAST>(ExprAST::Kind::Var);
            node->var = idx.convert_to<int>();
            return node;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t at = pos_;
            bool neg = c == '-';
            if (neg) ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected number", at);
            BigInt num = parse_uint();
            if (neg) num = -num;
            BigInt den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                size_t dat = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected denominator", dat);
                den = parse_uint();
                if (den == 0) throw ParseError("zero denominator", dat);
            }
            auto node = std::make_unique<ExprAST>(ExprAST::Kind::Literal);
            node->value = Rational(num, den);
            return node;
        }
        throw ParseError(pos_ == src_.size() ? "unexpected end of input" : "unexpected character",
                         pos_);
    }

    BigInt parse_uint() {
        BigInt v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    const std::string& src_;
    int n_ = -1;
    size_t pos_ = 0;
};

inline Poly eval_ast(const ExprAST& a, int n) {
    using K = ExprAST::Kind;
    switch (a.kind) {
        case K::Literal:
            return Poly::constant(n, GaussianRational(a.value));
        case K::ImagUnit:
            return Poly::constant(n, GaussianRational::unit_i());
        case K::Var:
            if (a.var > n)
                throw ParseError("variable x" + std::to_string(a.var) + " exceeds dimension " +
                                     std::to_string(n),
                                 0);
            return Poly::variable(n, a.var - 1);
        case K::TVar:
            return Poly::t_variable(n);
        case K::Add:
            return eval_ast(*a.lhs, n) + eval_ast(*a.rhs, n);
        case K::Sub:
            return eval_ast(*a.lhs, n) - eval_ast(*a.rhs, n);
        case K::Neg:
            return -eval_ast(*a.lhs, n);
        case K::Mul:
            return eval_ast(*a.lhs, n) * eval_ast(*a.rhs, n);
        case K::Pow:
            return eval_ast(*a.lhs, n).pow(a.exponent);
    }
    throw internal_error("eval_ast: unreachable");
}

}  // namespace detail

inline Poly parse_poly(const std::string& src, int n) {
    detail::ExprParser p(src, n);
    return detail::eval_ast(*p.parse(), n);
}

}  // namespace schsym
