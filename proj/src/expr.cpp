#include "ellred/expr.hpp"

#include <cctype>

namespace ellred {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprAst parse() {
        ExprAst e = expression();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    ExprAst expression() {
        ExprAst lhs = term();
        for (;;) {
            skip_ws();
            if (accept('+')) lhs = binary(ExprNode::Kind::Add, std::move(lhs), term());
            else if (accept('-')) lhs = binary(ExprNode::Kind::Sub, std::move(lhs), term());
            else return lhs;
        }
    }

    ExprAst term() {
        ExprAst lhs = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) lhs = binary(ExprNode::Kind::Mul, std::move(lhs), unary());
            else if (accept('/')) lhs = binary(ExprNode::Kind::Div, std::move(lhs), unary());
            else return lhs;
        }
    }

    ExprAst unary() {
        skip_ws();
        if (accept('-')) {
            auto n = node(ExprNode::Kind::Neg, pos_ - 1);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = atom();
        skip_ws();
        if (!accept('^')) return base;
        std::size_t at = pos_ - 1;
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be an integer literal", pos_);
        Int e = read_integer();
        if (e > 64) throw ParseError("exponent too large", at);
        auto n = node(ExprNode::Kind::Pow, at);
        n->lhs = std::move(base);
        n->exponent = static_cast<int>(e) * (neg ? -1 : 1);
        return n;
    }

    ExprAst atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            std::size_t at = pos_++;
            ExprAst inner = expression();
            skip_ws();
            if (!accept(')')) throw ParseError("unbalanced parenthesis", at);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ExprNode::Kind::Integer, pos_);
            n->literal = read_integer();
            return n;
        }
        if (c == 't') { ++pos_; return node(ExprNode::Kind::VarT, pos_ - 1); }
        if (c == 'X' || c == 'x') { ++pos_; return node(ExprNode::Kind::VarX, pos_ - 1); }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Int read_integer() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    static ExprAst node(ExprNode::Kind k, std::size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = pos;
        return n;
    }
    static ExprAst binary(ExprNode::Kind k, ExprAst lhs, ExprAst rhs) {
        auto n = node(k, lhs->pos);
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace

ExprAst parse_expression(std::string_view src) { return Parser(src).parse(); }

XRatFunc evaluate_expression(const ExprNode& ast, const BaseFieldPtr& field, bool allow_x) {
    auto constant = [&](const BaseElement& e) { return XRatFunc::constant(e, "X"); };
    switch (ast.kind) {
    case ExprNode::Kind::Integer:
        return constant(field->from_int(ast.literal));
    case ExprNode::Kind::VarT:
        if (!field->has_variable_t())
            throw ParseError("variable t is not an element of " + field->describe(), ast.pos);
        return constant(field->t());
    case ExprNode::Kind::VarX:
        if (!allow_x) throw ParseError("variable X is not allowed in a base field element", ast.pos);
        return XRatFunc::variable(field->zero(), "X");
    case ExprNode::Kind::Neg:
        return -evaluate_expression(*ast.lhs, field, allow_x);
    case ExprNode::Kind::Add:
        return evaluate_expression(*ast.lhs, field, allow_x) +
               evaluate_expression(*ast.rhs, field, allow_x);
    case ExprNode::Kind::Sub:
        return evaluate_expression(*ast.lhs, field, allow_x) -
               evaluate_expression(*ast.rhs, field, allow_x);
    case ExprNode::Kind::Mul:
        return evaluate_expression(*ast.lhs, field, allow_x) *
               evaluate_expression(*ast.rhs, field, allow_x);
    case ExprNode::Kind::Div: {
        XRatFunc den = evaluate_expression(*ast.rhs, field, allow_x);
        if (den.is_zero()) throw ParseError("division by zero", ast.pos);
        return evaluate_expression(*ast.lhs, field, allow_x) / den;
    }
    case ExprNode::Kind::Pow: {
        XRatFunc base = evaluate_expression(*ast.lhs, field, allow_x);
        if (base.is_zero() && ast.exponent <= 0)
            throw ParseError("zero raised to a nonpositive power", ast.pos);
        return base.pow(ast.exponent);
    }
    }
    throw ParseError("malformed expression tree", ast.pos);
}

BaseElement parse_element(std::string_view src, const BaseFieldPtr& field) {
    ExprAst ast = parse_expression(src);
    XRatFunc v = evaluate_expression(*ast, field, /*allow_x=*/false);
    // X was rejected, so the value is a degree-0 rational function in X
    return v.num().is_zero() ? field->zero() : v.num()[0] / v.den()[0];
}

XRatFunc parse_x_ratfunc(std::string_view src, const BaseFieldPtr& field) {
    ExprAst ast = parse_expression(src);
    return evaluate_expression(*ast, field, /*allow_x=*/true);
}

AffineGenerator parse_generator(std::string_view src, const BaseFieldPtr& field, std::string label) {
    XRatFunc g = parse_x_ratfunc(src, field);
    if (!g.is_poly() || g.num().degree() != 1)
        throw DomainError("generator must be affine in X with a nonzero X coefficient: " +
                          std::string(src));
    BaseElement den_inv = g.den()[0].inverse();
    BaseElement e = g.num()[1] * den_inv;
    BaseElement f = g.num()[0] * den_inv;
    return AffineGenerator(std::move(e), std::move(f), std::move(label));
}

} // namespace ellred
