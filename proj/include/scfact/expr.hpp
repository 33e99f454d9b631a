#pragma once

#include <memory>
#include <string>

#include "scfact/ring.hpp"

namespace scfact {

/// Expression AST for coefficient formulas such as "2*cos(2*pi*n/3)".
/// Variables: n (sequence index) and s (grid point, sampled rings only).
struct ExprNode {
    enum class Kind {
        Number, // rational literal
        VarN,
        VarS,
        Pi,
        Add,
        Sub,
        Mul,
        Div,
        Pow, // rhs is a nonnegative integer literal
        Neg,
        Cos,
        Sin,
        Sqrt,
    };
    Kind kind;
    BigRat value; // Number only
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// Parse with precedence ^ > unary - > *,/ > +,- and left associativity.
/// Rejects trig/pi/s when the target ring is exact, unknown identifiers always.
ExprPtr parse_expression(const std::string& text, const RingDescriptor& ring);

/// Canonical text form; parse(pretty_print(e)) yields a structurally equal AST.
std::string pretty_print(const ExprPtr& e);

bool ast_equal(const ExprPtr& a, const ExprPtr& b);

/// Evaluate at index n in the given ring. Float kinds evaluate in double
/// (pointwise over the grid for sampled rings); exact kinds evaluate exactly.
RingValue eval_expression(const ExprPtr& e, const RingDescriptor& ring, long long n);

} // namespace scfact
