#include "genproj/expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace genproj {

namespace {

using Fn = std::function<double(double)>;

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expression parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Fn parse() {
        Fn e = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return e;
    }

    Fn expr() {
        Fn lhs = term();
        for (;;) {
            if (eat('+')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double t) { return lhs(t) + rhs(t); };
            } else if (eat('-')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double t) { return lhs(t) - rhs(t); };
            } else {
                return lhs;
            }
        }
    }

    Fn term() {
        Fn lhs = factor();
        for (;;) {
            if (eat('*')) {
                Fn rhs = factor();
                lhs = [lhs, rhs](double t) { return lhs(t) * rhs(t); };
            } else if (eat('/')) {
                Fn rhs = factor();
                lhs = [lhs, rhs](double t) { return lhs(t) / rhs(t); };
            } else {
                return lhs;
            }
        }
    }

    Fn factor() {
        Fn base = unary();
        if (eat('^')) {
            Fn ex = factor();  // right associative
            return [base, ex](double t) { return std::pow(base(t), ex(t)); };
        }
        return base;
    }

    Fn unary() {
        if (eat('-')) {
            Fn inner = unary();
            return [inner](double t) { return -inner(t); };
        }
        eat('+');
        return primary();
    }

    Fn primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Fn inner = expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        fail("unexpected character");
    }

    Fn number() {
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        double v = std::stod(s.substr(start, pos - start));
        return [v](double) { return v; };
    }

    Fn ident() {
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string name = s.substr(start, pos - start);
        if (name == "t") return [](double t) { return t; };
        if (name == "pi") return [](double) { return M_PI; };
        if (name == "pow") {
            if (!eat('(')) fail("pow expects '('");
            Fn a = expr();
            if (!eat(',')) fail("pow expects two arguments");
            Fn b = expr();
            if (!eat(')')) fail("missing ')'");
            return [a, b](double t) { return std::pow(a(t), b(t)); };
        }
        if (!eat('(')) fail("unknown name: " + name);
        Fn a = expr();
        if (!eat(')')) fail("missing ')'");
        if (name == "sin") return [a](double t) { return std::sin(a(t)); };
        if (name == "cos") return [a](double t) { return std::cos(a(t)); };
        if (name == "exp") return [a](double t) { return std::exp(a(t)); };
        if (name == "abs") return [a](double t) { return std::fabs(a(t)); };
        fail("unknown function: " + name);
    }
};

}  // namespace

std::function<double(double)> parse_expression(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace genproj
