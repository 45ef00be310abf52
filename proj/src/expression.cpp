#include "sullivan/expression.hpp"

#include "sullivan/errors.hpp"

#include <cctype>

namespace sullivan {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e;
        skip();
        if (at_end()) fail("empty expression");
        Rational sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            advance();
            skip();
        }
        e.terms.push_back(term(sign));
        skip();
        while (!at_end()) {
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
            advance();
            skip();
            e.terms.push_back(term(c == '-' ? -1 : 1));
            skip();
        }
        return e;
    }

private:
    ExprTerm term(const Rational& sign) {
        ExprTerm t;
        t.coefficient = sign;
        if (at_end()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient *= coefficient();
        } else {
            t.factors.push_back(factor());
        }
        skip();
        while (!at_end() && peek() == '*') {
            advance();
            skip();
            t.factors.push_back(factor());
            skip();
        }
        return t;
    }

    Rational coefficient() {
        const Integer num(digits());
        skip();
        if (!at_end() && peek() == '/') {
            advance();
            skip();
            const std::size_t l = line_, c = col_;
            const Integer den(digits());
            if (den == 0) throw ParseError("zero denominator", l, c);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    ExprFactor factor() {
        ExprFactor f;
        f.line = line_;
        f.column = col_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail(at_end() ? "expected a generator name" : std::string("expected a generator name, found '") + peek() + "'");
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            f.name += peek();
            advance();
        }
        skip();
        if (!at_end() && peek() == '^') {
            advance();
            skip();
            const std::string d = digits();
            if (d.size() > 6) fail("exponent too large");
            f.power = std::stoi(d);
        }
        return f;
    }

    std::string digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        return s;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

Element evaluate(const Expression& expr, const GradedAlgebra& algebra) {
    Element total = algebra.zero();
    for (const auto& t : expr.terms) {
        Element product = algebra.one();
        for (const auto& f : t.factors) {
            auto sym = algebra.symbol(f.name);
            if (!sym) throw ParseError("unknown generator '" + f.name + "'", f.line, f.column);
            product = product * power(*sym, f.power);
        }
        total += product * t.coefficient;
    }
    return total;
}

Element parse_element(std::string_view text, const GradedAlgebra& algebra) {
    return evaluate(parse_expression(text), algebra);
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace sullivan
