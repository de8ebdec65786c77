#pragma once

// Function mini-language over the variables x and y.
//
// Grammar (standard precedence, '^' binds tightest and takes an integer
// exponent, unary minus binds looser than '^' so -x^2 = -(x^2)):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | 'x' | 'y' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := 'sin' | 'cos' | 'exp'
//
// Partial derivatives are derived symbolically from the tree.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "opcalc/function2d.hpp"

namespace opcalc::expr {

enum class Op { constant, var_x, var_y, add, sub, mul, div, pow, sin, cos, exp, neg };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Op op;
    double value = 0.0;  // constant value
    int exponent = 0;    // pow only
    NodePtr lhs;         // unary operand / left operand / base
    NodePtr rhs;         // right operand
};

/// Immutable expression tree.
class Ast {
public:
    explicit Ast(NodePtr root);

    const Node& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }

    double eval(double x, double y) const;
    Ast d_dx() const;
    Ast d_dy() const;

    /// Fully parenthesized text that reparses to a structurally equal tree.
    std::string to_string() const;

    /// Structural equality (same node kinds, constants compared exactly).
    friend bool operator==(const Ast& a, const Ast& b);

private:
    NodePtr root_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Ast parse(std::string_view text);

/// Function2D backed by the tree and its symbolic partials. The descriptor is
/// the source text.
Function2D to_function(const Ast& ast, std::string descriptor);

/// parse + to_function with the source text as descriptor.
Function2D parse_function(std::string_view text);

}  // namespace opcalc::expr
