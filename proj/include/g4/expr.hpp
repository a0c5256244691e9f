#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "g4/jet.hpp"

namespace g4 {

enum class BinOp { add, sub, mul, div, pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree for the spatial components of a curve. Nodes carry the
/// byte offset of their defining token so evaluation errors can point back
/// into the source text.
struct Expr {
    struct Num {
        double value;
    };
    struct Var {};  // the curve parameter s
    struct Param {
        std::string name;
    };
    struct Neg {
        ExprPtr arg;
    };
    struct Bin {
        BinOp op;
        ExprPtr lhs, rhs;
    };
    struct Call {
        Func fn;
        ExprPtr arg;
    };

    std::variant<Num, Var, Param, Neg, Bin, Call> node;
    std::size_t offset = 0;
};

using ParamMap = std::map<std::string, double>;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    const std::set<std::string>& params;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    static ExprPtr make(Expr::Num n, std::size_t at) {
        return std::make_shared<Expr>(Expr{{n}, at});
    }

    // expr := term { (+|-) term }
    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos >= src.size()) break;
            const char c = src[pos];
            if (c != '+' && c != '-') break;
            const std::size_t at = pos++;
            ExprPtr rhs = parse_term();
            lhs = std::make_shared<Expr>(
                Expr{Expr::Bin{c == '+' ? BinOp::add : BinOp::sub, lhs, rhs}, at});
        }
        return lhs;
    }

    // term := factor { (*|/) factor }
    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (pos >= src.size()) break;
            const char c = src[pos];
            if (c != '*' && c != '/') break;
            const std::size_t at = pos++;
            ExprPtr rhs = parse_factor();
            lhs = std::make_shared<Expr>(
                Expr{Expr::Bin{c == '*' ? BinOp::mul : BinOp::div, lhs, rhs}, at});
        }
        return lhs;
    }

    // factor := '-' factor | power   (unary minus binds looser than ^)
    ExprPtr parse_factor() {
        skip_ws();
        if (pos < src.size() && src[pos] == '-') {
            const std::size_t at = pos++;
            ExprPtr arg = parse_factor();
            return std::make_shared<Expr>(Expr{Expr::Neg{arg}, at});
        }
        return parse_power();
    }

    // power := primary [ '^' factor ]   (right-associative)
    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        skip_ws();
        if (pos < src.size() && src[pos] == '^') {
            const std::size_t at = pos++;
            ExprPtr expo = parse_factor();
            return std::make_shared<Expr>(Expr{Expr::Bin{BinOp::pow, base, expo}, at});
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos >= src.size()) throw ParseError("expected operand", pos);
        const char c = src[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    // Decimal literal with optional fraction and exponent; no hex, no
    // underscores.
    ExprPtr parse_number() {
        const std::size_t start = pos;
        bool any_digit = false;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            ++pos;
            any_digit = true;
        }
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                ++pos;
                any_digit = true;
            }
        }
        if (!any_digit) throw ParseError("malformed number", start);
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t mark = pos++;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                throw ParseError("malformed exponent", mark);
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        const std::string text(src.substr(start, pos - start));
        return make(Expr::Num{std::strtod(text.c_str(), nullptr)}, start);
    }

    ExprPtr parse_ident() {
        const std::size_t start = pos;
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                    src[pos] == '_'))
            ++pos;
        const std::string name(src.substr(start, pos - start));
        skip_ws();
        if (pos < src.size() && src[pos] == '(') {
            ++pos;
            Func fn;
            if (name == "sin") fn = Func::sin;
            else if (name == "cos") fn = Func::cos;
            else if (name == "tan") fn = Func::tan;
            else if (name == "exp") fn = Func::exp;
            else if (name == "log") fn = Func::log;
            else if (name == "sqrt") fn = Func::sqrt;
            else if (name == "sinh") fn = Func::sinh;
            else if (name == "cosh") fn = Func::cosh;
            else throw ParseError("unknown function '" + name + "'", start);
            ExprPtr arg = parse_sum();
            skip_ws();
            if (pos < src.size() && src[pos] == ',')
                throw ParseError("'" + name + "' takes exactly one argument", pos);
            expect(')');
            return std::make_shared<Expr>(Expr{Expr::Call{fn, arg}, start});
        }
        if (name == "s") return std::make_shared<Expr>(Expr{Expr::Var{}, start});
        if (params.count(name))
            return std::make_shared<Expr>(Expr{Expr::Param{name}, start});
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

}  // namespace detail

/// Parses an expression over the variable s and the given parameter names.
/// Precedence, tightest first: ^ (right-associative), unary minus, * /, + -.
inline ExprPtr parse_expr(std::string_view src, const std::set<std::string>& params) {
    detail::Parser p{src, 0, params};
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != src.size())
        throw ParseError("unexpected trailing input", p.pos);
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation (generic over double and Jet)
// ---------------------------------------------------------------------------

namespace detail {

inline double constant_term(double x) { return x; }
inline double constant_term(const Jet& x) { return x.c[0]; }

inline bool is_constant(double) { return true; }
inline bool is_constant(const Jet& x) {
    for (std::size_t k = 1; k <= Jet::order; ++k)
        if (x.c[k] != 0.0) return false;
    return true;
}

inline double checked_div(double a, double b, std::size_t at) {
    if (b == 0.0) throw DomainError("divide", 0.0, at);
    return a / b;
}
inline Jet checked_div(const Jet& a, const Jet& b, std::size_t at) {
    if (b.c[0] == 0.0) throw DomainError("divide", 0.0, at);
    return a / b;
}

inline double checked_pow(double base, double expo, std::size_t at) {
    if (expo == std::rint(expo) && std::abs(expo) <= 1e15) {
        // Integer exponents by repeated squaring, mirroring the jet rule.
        long n = static_cast<long>(expo);
        if (n < 0) return checked_div(1.0, checked_pow(base, static_cast<double>(-n), at), at);
        double result = 1.0, b = base;
        unsigned long e = static_cast<unsigned long>(n);
        while (e > 0) {
            if (e & 1UL) result *= b;
            b *= b;
            e >>= 1UL;
        }
        return result;
    }
    if (!(base > 0.0)) throw DomainError("pow", base, at);
    return std::pow(base, expo);
}
inline Jet checked_pow(const Jet& base, const Jet& expo, std::size_t at) {
    try {
        return pow(base, expo);
    } catch (const DomainError& e) {
        throw DomainError(e.op, e.value, at);
    }
}

inline double checked_fun(Func f, double x, std::size_t at) {
    try {
        return apply_fun(f, x);
    } catch (const DomainError& e) {
        throw DomainError(e.op, e.value, at);
    }
}
inline Jet checked_fun(Func f, const Jet& x, std::size_t at) {
    try {
        return jet_fun(f, x);
    } catch (const DomainError& e) {
        throw DomainError(e.op, e.value, at);
    }
}

}  // namespace detail

/// Evaluates an expression at s, which may be a plain double or a Jet. All
/// domain checks of the jet layer apply to both scalar types; violations are
/// rethrown with the offending node's byte offset attached.
template <class T>
T eval(const Expr& e, const T& s, const ParamMap& params) {
    struct Visitor {
        const T& s;
        const ParamMap& params;
        std::size_t at;

        T operator()(const Expr::Num& n) const { return T(n.value); }
        T operator()(const Expr::Var&) const { return s; }
        T operator()(const Expr::Param& p) const {
            auto it = params.find(p.name);
            if (it == params.end())
                throw Error("unbound parameter '" + p.name + "'");
            return T(it->second);
        }
        T operator()(const Expr::Neg& n) const { return -eval<T>(*n.arg, s, params); }
        T operator()(const Expr::Bin& b) const {
            T l = eval<T>(*b.lhs, s, params);
            T r = eval<T>(*b.rhs, s, params);
            switch (b.op) {
                case BinOp::add: return l + r;
                case BinOp::sub: return l - r;
                case BinOp::mul: return l * r;
                case BinOp::div: return detail::checked_div(l, r, at);
                case BinOp::pow: return detail::checked_pow(l, r, at);
            }
            throw Error("unknown binary operator");
        }
        T operator()(const Expr::Call& c) const {
            return detail::checked_fun(c.fn, eval<T>(*c.arg, s, params), at);
        }
    };
    return std::visit(Visitor{s, params, e.offset}, e.node);
}

inline double eval_real(const Expr& e, double s, const ParamMap& params) {
    return eval<double>(e, s, params);
}

inline Jet eval_jet(const Expr& e, const Jet& s, const ParamMap& params) {
    return eval<Jet>(e, s, params);
}

// ---------------------------------------------------------------------------
// Printing and structural comparison
// ---------------------------------------------------------------------------

namespace detail {

inline int precedence_of(const Expr& e) {
    struct V {
        int operator()(const Expr::Num&) const { return 5; }
        int operator()(const Expr::Var&) const { return 5; }
        int operator()(const Expr::Param&) const { return 5; }
        int operator()(const Expr::Call&) const { return 5; }
        int operator()(const Expr::Neg&) const { return 3; }
        int operator()(const Expr::Bin& b) const {
            switch (b.op) {
                case BinOp::add:
                case BinOp::sub: return 1;
                case BinOp::mul:
                case BinOp::div: return 2;
                case BinOp::pow: return 4;
            }
            return 0;
        }
    };
    return std::visit(V{}, e.node);
}

inline void print_expr(std::string& out, const Expr& e);

inline void print_child(std::string& out, const Expr& child, bool parens) {
    if (parens) {
        out += '(';
        print_expr(out, child);
        out += ')';
    } else {
        print_expr(out, child);
    }
}

inline void print_expr(std::string& out, const Expr& e) {
    struct V {
        std::string& out;
        void operator()(const Expr::Num& n) const {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
        }
        void operator()(const Expr::Var&) const { out += 's'; }
        void operator()(const Expr::Param& p) const { out += p.name; }
        void operator()(const Expr::Neg& n) const {
            out += '-';
            print_child(out, *n.arg, precedence_of(*n.arg) < 3);
        }
        void operator()(const Expr::Bin& b) const {
            const int prec = b.op == BinOp::pow ? 4 : (b.op == BinOp::mul || b.op == BinOp::div ? 2 : 1);
            const char* sym = b.op == BinOp::add   ? "+"
                              : b.op == BinOp::sub ? "-"
                              : b.op == BinOp::mul ? "*"
                              : b.op == BinOp::div ? "/"
                                                   : "^";
            if (b.op == BinOp::pow) {
                // Right-associative: parenthesize an exponentiation on the left.
                print_child(out, *b.lhs, precedence_of(*b.lhs) <= prec && precedence_of(*b.lhs) != 5);
                out += sym;
                print_child(out, *b.rhs, precedence_of(*b.rhs) < 3);
            } else {
                print_child(out, *b.lhs, precedence_of(*b.lhs) < prec);
                out += sym;
                print_child(out, *b.rhs, precedence_of(*b.rhs) < prec ||
                                             (precedence_of(*b.rhs) == prec && prec <= 2));
            }
        }
        void operator()(const Expr::Call& c) const {
            out += func_name(c.fn);
            out += '(';
            print_expr(out, *c.arg);
            out += ')';
        }
    };
    std::visit(V{out}, e.node);
}

}  // namespace detail

/// Renders the tree with minimal parentheses; the result re-parses to a
/// structurally identical tree.
inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print_expr(out, e);
    return out;
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    struct V {
        const Expr& other;
        bool operator()(const Expr::Num& n) const {
            return std::get<Expr::Num>(other.node).value == n.value;
        }
        bool operator()(const Expr::Var&) const { return true; }
        bool operator()(const Expr::Param& p) const {
            return std::get<Expr::Param>(other.node).name == p.name;
        }
        bool operator()(const Expr::Neg& n) const {
            return structurally_equal(*n.arg, *std::get<Expr::Neg>(other.node).arg);
        }
        bool operator()(const Expr::Bin& b) const {
            const auto& o = std::get<Expr::Bin>(other.node);
            return b.op == o.op && structurally_equal(*b.lhs, *o.lhs) &&
                   structurally_equal(*b.rhs, *o.rhs);
        }
        bool operator()(const Expr::Call& c) const {
            const auto& o = std::get<Expr::Call>(other.node);
            return c.fn == o.fn && structurally_equal(*c.arg, *o.arg);
        }
    };
    return std::visit(V{b}, a.node);
}

}  // namespace g4
