#pragma once

#include "coembed/algebra.hpp"
#include "coembed/series.hpp"

#include <cstddef>
#include <vector>

namespace coembed {

// An element of an algebra, kept in normal form: no zero coefficients and,
// for PBW algebras, only sorted words. Elements of a commutative quotient
// K[x]/I are represented by any polynomial of the cover; reduction modulo I
// lives in Ideal.
class Polynomial {
public:
    explicit Polynomial(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    // Normalizes `terms`.
    Polynomial(AlgebraPtr algebra, const Terms& terms);

    static Polynomial constant(AlgebraPtr algebra, const Scalar& c);
    static Polynomial generator(AlgebraPtr algebra, std::size_t index);
    static Polynomial monomial(AlgebraPtr algebra, const Monomial& m, const Scalar& c = Scalar(1));

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept;
    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const { return coefficient(Monomial()); }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Scalar& leading_coefficient() const { return terms_.begin()->second; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

    Polynomial pow(unsigned e) const;

    // Same algebra (presentation-wise) and same terms.
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void require_same_algebra(const Polynomial& o, const char* op) const;

    AlgebraPtr algebra_;
    Terms terms_;
};

// [a, b] = ab - ba.
Polynomial commutator(const Polynomial& a, const Polynomial& b);

// Product of the factors in order; the empty product is 1.
Polynomial product(const AlgebraPtr& algebra, const std::vector<Polynomial>& factors);

// Evaluates a linear combination of words with generator g replaced by
// images[g]; the images live in `target`. This is the substitution behind
// homomorphisms and relation checks.
Polynomial substitute(const Terms& terms, const std::vector<Polynomial>& images, const AlgebraPtr& target);

// Reinterprets a polynomial's terms in another algebra on the same
// generators (re-normalizing).
Polynomial rebase(const Polynomial& p, const AlgebraPtr& target);

// d/dx_gen of p. Commutative algebras only (throws UnsupportedKind).
Polynomial partial_derivative(const Polynomial& p, std::size_t gen);

inline bool series_space_compatible(const Polynomial& a, const Polynomial& b)
{
    return same_algebra(a.algebra(), b.algebra());
}

using PolySeries = HbarSeries<Polynomial>;

} // namespace coembed
