#pragma once

#include "coembed/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace coembed {

// Surface syntax:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := rational | 'i' | 'h' | name | '(' expr ')'
// Products keep their written order; 'i' and 'h' are reserved.
struct Expr {
    enum class Kind { number, imaginary, hbar, name, sum, product, power, negation, group };

    Kind kind = Kind::number;
    // number
    Rational value;
    // name
    std::string name;
    // sum: children with per-child sign; product: ordered factors;
    // power/negation/group: one child
    std::vector<std::unique_ptr<Expr>> children;
    std::vector<bool> negated;
    unsigned exponent = 0;
    std::size_t offset = 0;
};

// Throws ParseError with a 0-based offset and 1-based line/column.
std::unique_ptr<Expr> parse_ast(std::string_view src);

// Evaluation into an algebra. Throws InvalidInput for unknown generators,
// 'i' over Q, and 'h' (which needs a series context).
Polynomial evaluate(const Expr& e, const AlgebraPtr& algebra);
// Evaluation into C[h]/<h^{order+1}> with coefficients in the algebra.
PolySeries evaluate_series(const Expr& e, const AlgebraPtr& algebra, std::size_t order);

Polynomial parse_polynomial(std::string_view src, const AlgebraPtr& algebra);
PolySeries parse_series(std::string_view src, const AlgebraPtr& algebra, std::size_t order);

// Canonical rendering: terms in decreasing degrevlex order, runs of a
// letter written as powers, '*' between factors.
std::string format_terms(const Terms& terms, const std::vector<std::string>& generators);
std::string format_polynomial(const Polynomial& p);
std::string format_series(const PolySeries& s);

} // namespace coembed
