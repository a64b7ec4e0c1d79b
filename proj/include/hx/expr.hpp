#ifndef HX_EXPR_HPP
#define HX_EXPR_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "hx/stem.hpp"

namespace hx {

/// AST for stem expressions over x, y and the stem unit iota, with
/// `z` sugar for x + iota*y and `conj(z)` for x - iota*y.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, var_x, var_y, var_z, iota, unary_neg, binary, call };
    Kind kind;
    double number = 0.0;
    char op = 0;  // one of + - * / ^ for binary nodes
    std::string callee;
    std::vector<ExprPtr> args;  // 1 for neg/call, 2 for binary
};

/// A parsed stem expression: one or more components (tuple arity).
struct StemExpr {
    std::vector<ExprPtr> components;

    int arity() const { return static_cast<int>(components.size()); }
    std::complex<double> eval_component(int i, double x, double y) const;
    std::string print() const;

    /// Stem over the given algebra; evaluation in the complexified
    /// plane, F1 = Re, F2 = Im componentwise. Derivatives fall back to
    /// central differences.
    StemFunction to_stem(int algebra_dim) const;
};

/// Parses an expression or a parenthesized comma tuple; diagnostics
/// carry a 1-based column.
StemExpr parse_stem_expr(const std::string& text);

bool structurally_equal(const StemExpr& a, const StemExpr& b);

} // namespace hx

#endif
