#pragma once

#include "sullivan/gca.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sullivan {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := coeff ('*' factor)* | factor ('*' factor)*
// factor := name | name '^' nat
// coeff  := int | int '/' nat
// Multiplication is always written with '*'.
struct ExprFactor {
    std::string name;
    int power = 1;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct ExprTerm {
    Rational coefficient = 1;
    std::vector<ExprFactor> factors;
};

struct Expression {
    std::vector<ExprTerm> terms;
};

Expression parse_expression(std::string_view text);

// Resolves names against the algebra's generators and ring symbols.
Element evaluate(const Expression& expr, const GradedAlgebra& algebra);

Element parse_element(std::string_view text, const GradedAlgebra& algebra);

bool is_identifier(std::string_view s);

}  // namespace sullivan
