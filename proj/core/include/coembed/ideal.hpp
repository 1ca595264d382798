#pragma once

#include "coembed/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace coembed {

// Row-reduced span of polynomials, pivoting on the degrevlex-largest
// monomial. Every pivot monomial occurs in exactly one row.
class EchelonSpan {
public:
    explicit EchelonSpan(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    void insert(Terms row);
    // Remainder after eliminating pivot monomials; zero iff p is in the span.
    Terms reduce(Terms p) const;

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::vector<Polynomial> basis() const;
    bool is_pivot(const Monomial& m) const { return rows_.count(m) != 0; }

private:
    AlgebraPtr algebra_;
    std::map<Monomial, Terms, MonomialGreater> rows_;
};

// A two-sided ideal J of an algebra A, given by generators.
//
// Commutative A = K[x]/I: J is handled through a reduced Groebner basis of
// I + J in K[x] (exact, complete membership). Free and PBW A: membership is
// decided against the span of products m*g*m' of bounded degree, which is a
// certificate when it answers true and means "not within the bound"
// otherwise. For free algebras the defining relations join the generators.
class Ideal {
public:
    Ideal(AlgebraPtr ambient, std::vector<Polynomial> generators);

    // The ideal of relations of `algebra` inside its own elements; zero for
    // PBW algebras, whose relations are built into normal forms.
    static Ideal relations_of(const AlgebraPtr& algebra);

    const AlgebraPtr& ambient() const noexcept { return ambient_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    // True when membership is decided exactly (commutative ambient).
    bool exact() const noexcept { return ambient_->kind() == AlgebraKind::commutative; }

    // Reduced Groebner basis of I + J, monic, sorted by decreasing leading
    // monomial. Throws UnsupportedKind for non-commutative ambients.
    const std::vector<Polynomial>& groebner_basis() const;

    // Linear map p -> canonical remainder; zero iff p is in J (at the bound
    // for non-commutative ambients). The bound defaults to deg(p).
    Polynomial remainder(const Polynomial& p) const;
    Polynomial remainder(const Polynomial& p, std::size_t bound) const;
    bool contains(const Polynomial& p) const { return remainder(p).is_zero(); }

    // Echelon basis of the elements of J of degree <= d.
    std::vector<Polynomial> truncated_basis(std::size_t d) const;

    // Normal monomials of degree <= d that are not leading monomials of
    // elements of J: a basis of (A / J) in degrees <= d. Increasing order.
    std::vector<Monomial> standard_monomials(std::size_t d) const;

private:
    const EchelonSpan& span_at(std::size_t bound) const;

    struct Cache {
        std::mutex mutex;
        std::map<std::size_t, std::unique_ptr<EchelonSpan>> spans;
    };

    AlgebraPtr ambient_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> groebner_;
    std::shared_ptr<Cache> cache_;
};

// Reduced Groebner basis (Buchberger, coprime-leading-monomial criterion)
// of the ideal generated by `generators` in a commutative polynomial ring.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators);

// Full reduction of p by `basis`; zero iff p is in the ideal when `basis` is
// a Groebner basis.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& basis);

// Relation ideal of an algebra, built once per algebra object and shared.
std::shared_ptr<const Ideal> relation_ideal(const AlgebraPtr& algebra);
// Canonical representative of p modulo the relations of its algebra.
Polynomial reduce_relations(const Polynomial& p);
Polynomial reduce_relations(const Polynomial& p, std::size_t bound);

bool ideal_member(const Ideal& ideal, const Polynomial& p);
std::vector<Polynomial> truncated_ideal_basis(const Ideal& ideal, std::size_t d);

// Exponent-vector divisibility of commutative monomials (sorted words).
bool divides(const Monomial& a, const Monomial& b);
// b / a, assuming divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

} // namespace coembed
