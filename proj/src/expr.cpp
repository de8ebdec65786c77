#include "opcalc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace opcalc::expr {

namespace {

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    return std::make_shared<const Node>(Node{op, 0.0, 0, std::move(lhs), std::move(rhs)});
}

NodePtr constant(double v) { return std::make_shared<const Node>(Node{Op::constant, v, 0, nullptr, nullptr}); }

NodePtr power(NodePtr base, int n) {
    return std::make_shared<const Node>(Node{Op::pow, 0.0, n, std::move(base), nullptr});
}

bool is_const(const NodePtr& n, double v) { return n->op == Op::constant && n->value == v; }

// Builders used by differentiation; they fold the trivial 0/1 cases so
// derivative trees stay small.
NodePtr add(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return make(Op::add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
    if (is_const(b, 0.0)) return a;
    if (is_const(a, 0.0)) return make(Op::neg, std::move(b));
    return make(Op::sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return make(Op::mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return constant(0.0);
    if (is_const(b, 1.0)) return a;
    return make(Op::div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
    if (a->op == Op::constant) return constant(-a->value);
    return make(Op::neg, std::move(a));
}

double int_pow(double base, int n) {
    if (n < 0) return 1.0 / int_pow(base, -n);
    double result = 1.0;
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

double evaluate(const Node& n, double x, double y) {
    switch (n.op) {
        case Op::constant: return n.value;
        case Op::var_x: return x;
        case Op::var_y: return y;
        case Op::add: return evaluate(*n.lhs, x, y) + evaluate(*n.rhs, x, y);
        case Op::sub: return evaluate(*n.lhs, x, y) - evaluate(*n.rhs, x, y);
        case Op::mul: return evaluate(*n.lhs, x, y) * evaluate(*n.rhs, x, y);
        case Op::div: return evaluate(*n.lhs, x, y) / evaluate(*n.rhs, x, y);
        case Op::pow: return int_pow(evaluate(*n.lhs, x, y), n.exponent);
        case Op::sin: return std::sin(evaluate(*n.lhs, x, y));
        case Op::cos: return std::cos(evaluate(*n.lhs, x, y));
        case Op::exp: return std::exp(evaluate(*n.lhs, x, y));
        case Op::neg: return -evaluate(*n.lhs, x, y);
    }
    return 0.0;
}

NodePtr derive(const NodePtr& n, Op var) {
    switch (n->op) {
        case Op::constant: return constant(0.0);
        case Op::var_x:
        case Op::var_y: return constant(n->op == var ? 1.0 : 0.0);
        case Op::add: return add(derive(n->lhs, var), derive(n->rhs, var));
        case Op::sub: return sub(derive(n->lhs, var), derive(n->rhs, var));
        case Op::mul:
            return add(mul(derive(n->lhs, var), n->rhs), mul(n->lhs, derive(n->rhs, var)));
        case Op::div:
            return div(sub(mul(derive(n->lhs, var), n->rhs), mul(n->lhs, derive(n->rhs, var))),
                       power(n->rhs, 2));
        case Op::pow: {
            if (n->exponent == 0) return constant(0.0);
            NodePtr outer = n->exponent == 1 ? constant(1.0) : power(n->lhs, n->exponent - 1);
            return mul(mul(constant(n->exponent), outer), derive(n->lhs, var));
        }
        case Op::sin: return mul(make(Op::cos, n->lhs), derive(n->lhs, var));
        case Op::cos: return mul(neg(make(Op::sin, n->lhs)), derive(n->lhs, var));
        case Op::exp: return mul(n, derive(n->lhs, var));
        case Op::neg: return neg(derive(n->lhs, var));
    }
    return constant(0.0);
}

void print(const Node& n, std::string& out) {
    switch (n.op) {
        case Op::constant: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", std::abs(n.value));
            if (std::signbit(n.value)) {
                out += "(-";
                out += buf;
                out += ")";
            } else {
                out += buf;
            }
            return;
        }
        case Op::var_x: out += 'x'; return;
        case Op::var_y: out += 'y'; return;
        case Op::add:
        case Op::sub:
        case Op::mul:
        case Op::div: {
            static constexpr char symbol[] = {'+', '-', '*', '/'};
            out += '(';
            print(*n.lhs, out);
            out += symbol[static_cast<int>(n.op) - static_cast<int>(Op::add)];
            print(*n.rhs, out);
            out += ')';
            return;
        }
        case Op::pow:
            out += '(';
            print(*n.lhs, out);
            out += '^';
            out += std::to_string(n.exponent);
            out += ')';
            return;
        case Op::sin:
        case Op::cos:
        case Op::exp:
            out += n.op == Op::sin ? "sin(" : n.op == Op::cos ? "cos(" : "exp(";
            print(*n.lhs, out);
            out += ')';
            return;
        case Op::neg:
            out += "(-";
            print(*n.lhs, out);
            out += ')';
            return;
    }
}

bool equal(const Node& a, const Node& b) {
    if (a.op != b.op) return false;
    if (a.op == Op::constant) return a.value == b.value;
    if (a.op == Op::pow && a.exponent != b.exponent) return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr) || (a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse_all() {
        NodePtr e = expression();
        skip_space();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    NodePtr expression() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) lhs = make(Op::add, lhs, term());
            else if (accept('-')) lhs = make(Op::sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make(Op::mul, lhs, unary());
            else if (accept('/')) lhs = make(Op::div, lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::neg, unary());
        return power_expr();
    }

    NodePtr power_expr() {
        NodePtr base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            fail("exponent must be an integer literal");
        const auto [value, integral] = number_token();
        if (!integral) {
            pos_ = start;
            fail("non-integer exponent");
        }
        if (value > 1024.0) {
            pos_ = start;
            fail("exponent too large");
        }
        const int n = static_cast<int>(value);
        return power(base, negative ? -n : n);
    }

    // Returns the value and whether the literal was written as an integer.
    std::pair<double, bool> number_token() {
        const std::size_t start = pos_;
        bool integral = true;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            integral = false;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
            if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
                integral = false;
                pos_ = look;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        const std::string lexeme(s_.substr(start, pos_ - start));
        if (lexeme == ".") {
            pos_ = start;
            fail("malformed number");
        }
        return {std::strtod(lexeme.c_str(), nullptr), integral};
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(number_token().first);
        if (c == '(') {
            ++pos_;
            NodePtr e = expression();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view word = s_.substr(start, pos_ - start);
            if (word == "x") return make(Op::var_x);
            if (word == "y") return make(Op::var_y);
            if (word == "pi") return constant(std::numbers::pi);
            if (word == "sin" || word == "cos" || word == "exp") {
                expect('(');
                NodePtr arg = expression();
                expect(')');
                const Op op = word == "sin" ? Op::sin : word == "cos" ? Op::cos : Op::exp;
                return make(op, arg);
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(word) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

Ast::Ast(NodePtr root) : root_(std::move(root)) {
    if (!root_) throw std::invalid_argument("Ast: null root");
}

double Ast::eval(double x, double y) const { return evaluate(*root_, x, y); }
Ast Ast::d_dx() const { return Ast(derive(root_, Op::var_x)); }
Ast Ast::d_dy() const { return Ast(derive(root_, Op::var_y)); }

std::string Ast::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

bool operator==(const Ast& a, const Ast& b) { return equal(*a.root_, *b.root_); }

Ast parse(std::string_view text) { return Ast(Parser(text).parse_all()); }

Function2D to_function(const Ast& ast, std::string descriptor) {
    const Ast dx = ast.d_dx(), dy = ast.d_dy();
    return Function2D([ast](double x, double y) { return Function2D::Scalar(ast.eval(x, y)); },
                      [dx](double x, double y) { return Function2D::Scalar(dx.eval(x, y)); },
                      [dy](double x, double y) { return Function2D::Scalar(dy.eval(x, y)); },
                      std::move(descriptor));
}

Function2D parse_function(std::string_view text) { return to_function(parse(text), std::string(text)); }

}  // namespace opcalc::expr
