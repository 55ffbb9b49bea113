#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gpi/freealg.hpp"

namespace gpi {

// Surface syntax:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" INT)*
//   base   := INT | VAR | "[" expr ("," expr)+ "]"
//           | "s" INT "(" expr ("," expr)* ")" | "(" expr ")"
//   VAR    := ("y"|"z") INT
// Whitespace-insensitive. Lowers to a unique NCPoly.
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
    struct Int { Rational value; };
    struct Var { Variable v; };
    struct Sum { std::vector<std::pair<int, ExprPtr>> terms; }; // sign is +-1
    struct Prod { std::vector<ExprPtr> factors; };
    struct Pow { ExprPtr base; int exponent; };
    struct BracketNode { std::vector<ExprPtr> args; };
    struct StdPoly { int n; std::vector<ExprPtr> args; };

    std::variant<Int, Var, Sum, Prod, Pow, BracketNode, StdPoly> node;
};

inline NCPoly lower(const Expr& e) {
    struct Visitor {
        NCPoly operator()(const Expr::Int& n) const { return NCPoly(n.value); }
        NCPoly operator()(const Expr::Var& v) const { return NCPoly(v.v); }
        NCPoly operator()(const Expr::Sum& s) const {
            NCPoly r;
            for (auto& [sign, t] : s.terms) {
                if (sign > 0)
                    r += lower(*t);
                else
                    r -= lower(*t);
            }
            return r;
        }
        NCPoly operator()(const Expr::Prod& p) const {
            NCPoly r = NCPoly::one();
            for (auto& f : p.factors) r *= lower(*f);
            return r;
        }
        NCPoly operator()(const Expr::Pow& p) const {
            NCPoly base = lower(*p.base), r = NCPoly::one();
            for (int i = 0; i < p.exponent; ++i) r *= base;
            return r;
        }
        NCPoly operator()(const Expr::BracketNode& b) const {
            std::vector<NCPoly> args;
            for (auto& a : b.args) args.push_back(lower(*a));
            return bracket(args);
        }
        NCPoly operator()(const Expr::StdPoly& s) const {
            std::vector<NCPoly> args;
            for (auto& a : s.args) args.push_back(lower(*a));
            return standard_poly(args);
        }
    };
    return std::visit(Visitor{}, e.node);
}

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < src_.size())
            fail("unexpected trailing input '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_);
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    std::string integer_literal() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an integer");
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            advance();
        }
        return digits;
    }

    int small_integer(const std::string& what) {
        std::string digits = integer_literal();
        if (digits.size() > 4) fail(what + " is too large");
        return std::stoi(digits);
    }

    ExprPtr expr() {
        Expr::Sum sum;
        int sign = eat('-') ? -1 : 1;
        sum.terms.emplace_back(sign, term());
        for (;;) {
            if (eat('+'))
                sum.terms.emplace_back(1, term());
            else if (eat('-'))
                sum.terms.emplace_back(-1, term());
            else
                break;
        }
        if (sum.terms.size() == 1 && sum.terms[0].first == 1)
            return sum.terms[0].second;
        return std::make_shared<Expr>(Expr{std::move(sum)});
    }

    ExprPtr term() {
        Expr::Prod prod;
        prod.factors.push_back(factor());
        while (eat('*')) prod.factors.push_back(factor());
        if (prod.factors.size() == 1) return prod.factors[0];
        return std::make_shared<Expr>(Expr{std::move(prod)});
    }

    ExprPtr factor() {
        ExprPtr base = primary();
        while (eat('^')) {
            int e = small_integer("exponent");
            base = std::make_shared<Expr>(Expr{Expr::Pow{std::move(base), e}});
        }
        return base;
    }

    ExprPtr primary() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v{BigInt(integer_literal())};
            return std::make_shared<Expr>(Expr{Expr::Int{v}});
        }
        if (c == '(') {
            eat('(');
            ExprPtr e = expr();
            expect(')', "to close the parenthesis");
            return e;
        }
        if (c == '[') {
            eat('[');
            Expr::BracketNode b;
            b.args.push_back(expr());
            while (eat(',')) b.args.push_back(expr());
            expect(']', "to close the commutator");
            if (b.args.size() < 2) fail("commutator needs at least two arguments");
            return std::make_shared<Expr>(Expr{std::move(b)});
        }
        if (c == 'y' || c == 'z') {
            eat(c);
            int idx = small_integer("variable index");
            if (idx < 1) fail("variable index must be at least 1");
            Variable v = c == 'y' ? yv(idx) : zv(idx);
            return std::make_shared<Expr>(Expr{Expr::Var{v}});
        }
        if (c == 's') {
            eat('s');
            int n = small_integer("standard polynomial degree");
            if (n < 1) fail("standard polynomial degree must be at least 1");
            expect('(', "after the standard polynomial degree");
            Expr::StdPoly s{n, {}};
            s.args.push_back(expr());
            while (eat(',')) s.args.push_back(expr());
            expect(')', "to close the standard polynomial");
            if (static_cast<int>(s.args.size()) != n)
                fail("standard polynomial s" + std::to_string(n) + " needs " +
                     std::to_string(n) + " arguments, got " +
                     std::to_string(s.args.size()));
            return std::make_shared<Expr>(Expr{std::move(s)});
        }
        fail("unknown symbol '" + std::string(1, c) + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace detail

inline ExprPtr parse_expr(const std::string& src) {
    return detail::Parser(src).parse();
}

inline NCPoly parse_poly(const std::string& src) {
    return lower(*parse_expr(src));
}

// Multidegree specification "y:2,z:1": counts of distinct multilinear even
// and odd variables.
inline std::pair<int, int> parse_signature(const std::string& spec) {
    int evens = 0, odds = 0;
    bool saw_even = false, saw_odd = false;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) {
        throw parse_error("bad multidegree '" + spec + "': " + msg, 1,
                          static_cast<int>(pos) + 1);
    };
    while (pos < spec.size()) {
        char c = spec[pos];
        if (c != 'y' && c != 'z') fail("expected 'y' or 'z'");
        ++pos;
        if (pos >= spec.size() || spec[pos] != ':') fail("expected ':'");
        ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos])))
            ++pos;
        if (pos == start || pos - start > 4) fail("expected a small count");
        int count = std::stoi(spec.substr(start, pos - start));
        if (c == 'y') {
            if (saw_even) fail("duplicate 'y' entry");
            saw_even = true;
            evens = count;
        } else {
            if (saw_odd) fail("duplicate 'z' entry");
            saw_odd = true;
            odds = count;
        }
        if (pos < spec.size()) {
            if (spec[pos] != ',') fail("expected ','");
            ++pos;
        }
    }
    if (!saw_even && !saw_odd) fail("empty specification");
    if (evens + odds < 1) fail("at least one variable is required");
    return {evens, odds};
}

} // namespace gpi
