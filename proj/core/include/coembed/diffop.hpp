#pragma once

#include "coembed/polynomial.hpp"

#include <map>
#include <vector>

namespace coembed {

// Exponents of a mixed partial derivative, one per generator.
using MultiIndex = std::vector<unsigned>;

// d^alpha p for a commutative polynomial p.
Polynomial apply_partials(const Polynomial& p, const MultiIndex& alpha);

unsigned order_of(const MultiIndex& alpha);

// Linear differential operator sum_alpha c_alpha * d^alpha with polynomial
// coefficients on a commutative polynomial algebra.
class DiffOperator {
public:
    explicit DiffOperator(AlgebraPtr algebra);

    static DiffOperator identity(AlgebraPtr algebra);
    static DiffOperator partial(AlgebraPtr algebra, std::size_t gen);
    // sum_i coeffs[i] * d/dx_i.
    static DiffOperator vector_field(AlgebraPtr algebra, const std::vector<Polynomial>& coeffs);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::map<MultiIndex, Polynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Highest |alpha|; 0 for the zero operator.
    unsigned order() const;

    void add_term(const Polynomial& coeff, const MultiIndex& alpha);

    Polynomial apply(const Polynomial& p) const;

    // (*this) o other.
    DiffOperator compose(const DiffOperator& other) const;

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator*=(const Scalar& c);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator*(DiffOperator a, const Scalar& c) { return a *= c; }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

private:
    AlgebraPtr algebra_;
    std::map<MultiIndex, Polynomial> terms_;
};

} // namespace coembed
