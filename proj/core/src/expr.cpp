#include "mstab/expr.hpp"

#include <cctype>

#include "mstab/stabilizer.hpp"

namespace mstab {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }

    ExprAst parse() {
        ExprAst e = expr();
        skip_ws();
        if (pos != s.size()) throw SyntaxError("trailing input", pos);
        return e;
    }

    ExprAst expr() {
        ExprAst lhs = term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                ExprAst rhs = term();
                auto n = std::make_unique<ExprNode>();
                n->kind = (c == '+') ? ExprNode::Add : ExprNode::Sub;
                n->lhs = std::move(lhs);
                n->rhs = std::move(rhs);
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    ExprAst term() {
        ExprAst lhs = factor();
        while (peek() == '*') {
            ++pos;
            ExprAst rhs = factor();
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Mul;
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
        return lhs;
    }

    ExprAst factor() {
        if (peek() == '-') {
            ++pos;
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Neg;
            n->lhs = factor();
            return n;
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            bool neg = eat('-');
            size_t start = pos;
            int64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            if (pos == start) throw SyntaxError("expected integer exponent", pos);
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Pow;
            n->value = neg ? -v : v;
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    ExprAst atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            ExprAst e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Int;
            n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "comm" || name == "conj") {
                expect('(');
                ExprAst a = expr();
                expect(',');
                ExprAst b = expr();
                expect(')');
                auto n = std::make_unique<ExprNode>();
                n->kind = (name == "comm") ? ExprNode::Comm : ExprNode::Conj;
                n->lhs = std::move(a);
                n->rhs = std::move(b);
                return n;
            }
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Const;
            n->name = name;
            return n;
        }
        throw SyntaxError("unexpected character", pos);
    }
};

OrderElement const_value(const std::string& name, int N) {
    if (name == "e") return named_element(Name::e, N);
    if (name == "w") return named_element(Name::omega, N);
    if (name == "pi") return named_element(Name::pi, N);
    if (name == "alpha") return named_element(Name::alpha, N);
    if (name == "i") return named_element(Name::i, N);
    if (name == "j") return named_element(Name::j, N);
    if (name == "k") return named_element(Name::k, N);
    if (name == "sqrt_m7") return named_element(Name::sqrt_m7, N);
    if (name == "alpha_i") return named_element(Name::alpha_i, N);
    if (name == "alpha_j") return named_element(Name::alpha_j, N);
    if (name == "alpha_k") return named_element(Name::alpha_k, N);
    if (name == "S") {
        int p = (N + 1) / 2;
        return OrderElement(WittNumber(0, 0, p), WittNumber(1, 0, p));
    }
    throw UnknownIdentifier(name);
}

}  // namespace

ExprAst parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Int: return std::to_string(n.value);
        case ExprNode::Const: return n.name;
        case ExprNode::Neg: return "-" + print_expr(*n.lhs);
        case ExprNode::Add: return "(" + print_expr(*n.lhs) + " + " + print_expr(*n.rhs) + ")";
        case ExprNode::Sub: return "(" + print_expr(*n.lhs) + " - " + print_expr(*n.rhs) + ")";
        case ExprNode::Mul: return "(" + print_expr(*n.lhs) + " * " + print_expr(*n.rhs) + ")";
        case ExprNode::Pow: return print_expr(*n.lhs) + "^" + std::to_string(n.value);
        case ExprNode::Comm:
            return "comm(" + print_expr(*n.lhs) + ", " + print_expr(*n.rhs) + ")";
        case ExprNode::Conj:
            return "conj(" + print_expr(*n.lhs) + ", " + print_expr(*n.rhs) + ")";
    }
    return "?";
}

OrderElement eval_expr(const ExprNode& n, int N) {
    switch (n.kind) {
        case ExprNode::Int: return OrderElement::from_int(n.value, N);
        case ExprNode::Const: return const_value(n.name, N);
        case ExprNode::Neg: return -eval_expr(*n.lhs, N);
        case ExprNode::Add: return eval_expr(*n.lhs, N) + eval_expr(*n.rhs, N);
        case ExprNode::Sub: return eval_expr(*n.lhs, N) - eval_expr(*n.rhs, N);
        case ExprNode::Mul: return eval_expr(*n.lhs, N) * eval_expr(*n.rhs, N);
        case ExprNode::Pow: return o_pow(eval_expr(*n.lhs, N), n.value);
        case ExprNode::Comm: {
            OrderElement a = eval_expr(*n.lhs, N), b = eval_expr(*n.rhs, N);
            return commutator(a, b);
        }
        case ExprNode::Conj: {
            OrderElement a = eval_expr(*n.lhs, N), b = eval_expr(*n.rhs, N);
            return a * b * a.inverse();
        }
    }
    throw Error("eval_expr: unreachable");
}

}  // namespace mstab
