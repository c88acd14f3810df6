#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ellred/base_field.hpp"
#include "ellred/gauss.hpp"

namespace ellred {

/// Abstract syntax of element expressions: integer literals, the variables
/// t and X, +, -, *, /, ^ with integer exponents, and parentheses.
struct ExprNode {
    enum class Kind { Integer, VarT, VarX, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Int literal;      // Integer
    int exponent = 0; // Pow
    std::size_t pos;  // byte offset in the source, for diagnostics
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

using ExprAst = std::unique_ptr<ExprNode>;

/// Parse an expression; standard precedence (^ above unary minus above
/// mul/div above add/sub), left associativity for the binary operators.
ExprAst parse_expression(std::string_view src);

/// Evaluate into E(X). The variable t requires a rational-function base
/// field; X requires allow_x.
XRatFunc evaluate_expression(const ExprNode& ast, const BaseFieldPtr& field, bool allow_x);

/// Parse an element of E itself (X rejected).
BaseElement parse_element(std::string_view src, const BaseFieldPtr& field);

/// Parse a rational function in X over E (for radicands).
XRatFunc parse_x_ratfunc(std::string_view src, const BaseFieldPtr& field);

/// Parse an affine generator e*X + f (degree-1 polynomial in X, e != 0).
AffineGenerator parse_generator(std::string_view src, const BaseFieldPtr& field,
                                std::string label = "S");

} // namespace ellred
