#pragma once
#include <memory>
#include <string>

#include "mstab/order.hpp"

namespace mstab {

// Grammar: + - * unary-, integer powers ^n (negative n only on units),
// parentheses, comm(a,b) = a b a^-1 b^-1, conj(a,b) = a b a^-1.
// Atoms: integer literals and the named constants
//   e w pi alpha i j k sqrt_m7 S alpha_i alpha_j alpha_k.
// Precedence: ^  >  unary-  >  *  >  + -, all left associative.
struct ExprNode {
    enum Kind { Int, Const, Neg, Add, Sub, Mul, Pow, Comm, Conj } kind;
    int64_t value = 0;        // Int payload, or the Pow exponent
    std::string name;         // Const payload
    std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprAst = std::unique_ptr<ExprNode>;

ExprAst parse_expr(const std::string& text);
std::string print_expr(const ExprNode& ast);
OrderElement eval_expr(const ExprNode& ast, int s_precision);

}  // namespace mstab
