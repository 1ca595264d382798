#pragma once

#include "coembed/linalg.hpp"
#include "coembed/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace coembed {

// A tuple of unknown polynomials p_0..p_{s-1}, each a combination of a fixed
// list of monomials, constrained by linear polynomial-valued maps.
//
// Conditions are given as functions of the tuple; they must be linear. Each
// is evaluated once per unknown coefficient and compared to its right-hand
// side monomial by monomial, so callers reduce the value to a canonical
// form (modulo relations) inside the function.
class PolynomialUnknowns {
public:
    using Tuple = std::vector<Polynomial>;
    using LinearMap = std::function<Polynomial(const Tuple&)>;

    PolynomialUnknowns(AlgebraPtr algebra, std::size_t slots, std::vector<Monomial> monomials);

    std::size_t columns() const noexcept { return solver_.columns(); }
    std::size_t equations() const noexcept { return equations_; }

    // map(tuple) == rhs.
    void require(const LinearMap& map, const Polynomial& rhs);
    void require_zero(const LinearMap& map);

    linalg::Solution solve() const { return solver_.solve(); }
    Tuple assemble(const linalg::Vector& v) const;

private:
    AlgebraPtr algebra_;
    std::size_t slots_;
    std::vector<Monomial> monomials_;
    // Unit tuples, one per column.
    std::vector<Tuple> units_;
    linalg::IncrementalSolver solver_;
    std::size_t equations_ = 0;
};

} // namespace coembed
