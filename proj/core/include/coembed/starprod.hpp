#pragma once

#include "coembed/diffop.hpp"
#include "coembed/poisson.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace coembed {

// (f, g) -> sum coeff * d^alpha f * d^beta g on a commutative polynomial ring.
class BidiffOperator {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    explicit BidiffOperator(AlgebraPtr ring);
    // (f, g) -> f g.
    static BidiffOperator pointwise(const AlgebraPtr& ring);

    const AlgebraPtr& ring() const noexcept { return ring_; }
    const std::map<Key, Polynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // max over terms of |alpha| and |beta|.
    unsigned order() const;

    void add_term(const Polynomial& coeff, const MultiIndex& alpha, const MultiIndex& beta);

    Polynomial apply(const Polynomial& f, const Polynomial& g) const;

private:
    AlgebraPtr ring_;
    std::map<Key, Polynomial> terms_;
};

// f * g = sum_{k <= r} h^k C_k(f, g) over Q(i)[x].
class StarProduct {
public:
    // ops[k] = C_k, k = 0..r. Requires a relation-free polynomial ring over
    // Q(i).
    StarProduct(AlgebraPtr ring, std::vector<BidiffOperator> ops);

    const AlgebraPtr& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return ops_.size() - 1; }
    const BidiffOperator& op(std::size_t k) const { return ops_.at(k); }
    const std::vector<BidiffOperator>& ops() const noexcept { return ops_; }
    unsigned max_operator_order() const;

    Polynomial component(std::size_t k, const Polynomial& f, const Polynomial& g) const;

    // Same product with C_k replaced.
    StarProduct with_operator(std::size_t k, BidiffOperator op) const;

private:
    AlgebraPtr ring_;
    std::vector<BidiffOperator> ops_;
};

// C_k = mu o (i^k / k!) (X (x) Y - Y (x) X)^k for commuting vector fields.
// Throws InvalidInput when [X, Y] != 0.
StarProduct exp_star(const VectorField& x, const VectorField& y, std::size_t r);

// Cauchy product of the C_k with the coefficients of f and g, truncated at
// their common order (at most S.order()).
PolySeries star_multiply(const StarProduct& s, const PolySeries& f, const PolySeries& g);
PolySeries star_multiply(const StarProduct& s, const Polynomial& f, const Polynomial& g);

// Monomials with every exponent <= p, in increasing degrevlex order.
std::vector<Monomial> probe_monomials(const AlgebraPtr& ring, unsigned p);

struct AssociativityFailure {
    Monomial f, g, h;
    // First h-order where the two associations differ.
    std::size_t order = 0;
    // h^order coefficients of (f*g)*h and f*(g*h).
    Polynomial left;
    Polynomial right;
};

struct StarAxiomReport {
    unsigned probe_degree = 0;
    // The probe degree also covers the order of the associator in each slot.
    bool exhaustive = true;
    bool c0_pointwise = true;
    bool unit_left = true;  // C_k(1, f) = 0 for k >= 1
    bool unit_right = true; // C_k(f, 1) = 0 for k >= 1
    bool associative = true;
    std::vector<AssociativityFailure> associativity_failures;
    bool c1_antisymmetric = true;
    // C_1(f,g) - C_1(g,f) = 2i {f,g} for the extracted bracket on all probes.
    bool c1_is_bracket = true;
    std::optional<PoissonStructure> extracted;
    bool extracted_jacobi = true;

    bool ok() const noexcept
    {
        return c0_pointwise && unit_left && unit_right && associative && c1_antisymmetric && c1_is_bracket &&
               extracted_jacobi;
    }
};

// Exhaustive over monomials with per-variable exponent <= p. Throws
// InvalidInput when p < max operator order + 1.
StarAxiomReport check_star_axioms(const StarProduct& s, unsigned p);

struct TangentialityReport {
    bool tangential = true;
    std::size_t checked = 0;
    struct Failure {
        std::size_t k = 0;
        Polynomial element;
        Monomial probe;
        Polynomial value;
    };
    std::optional<Failure> failure;
};

// C_k(j, f) in J for k >= 1, j in the degree <= d part of J, and probe
// monomials f with exponents <= max operator order + 1.
TangentialityReport tangentiality_check(const StarProduct& s, const Ideal& j, std::size_t d);

// D = sum_k h^k D_k.
struct FormalDerivation {
    std::vector<DiffOperator> components;

    std::size_t order() const noexcept { return components.empty() ? 0 : components.size() - 1; }
    PolySeries apply(const PolySeries& f) const;
};

struct HbarDerivationReport {
    bool ok = true;
    unsigned probe_degree = 0;
    std::optional<std::pair<Monomial, Monomial>> failing_pair;
    std::size_t failing_order = 0;
};

// D(f*g) = D(f)*g + f*D(g) mod h^{r+1} on monomial pairs with exponents <= p.
HbarDerivationReport check_hbar_derivation(const StarProduct& s, const FormalDerivation& d, unsigned p);

struct Order1Report {
    std::size_t degree_bound = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::vector<std::pair<VectorField, VectorField>> basis;
    std::size_t poisson_dimension = 0;
    std::size_t field_dimension = 0;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool dimensions_match() const noexcept { return dimension() == poisson_dimension + field_dimension; }
};

// Pairs (D_0, D_1) of vector fields with coefficients of degree <= d such
// that D_0 + h D_1 is an h-linear derivation of the order-1 product.
// Cross-checked against the Poisson solver for the extracted bracket.
Order1Report solve_order1_derivations(const StarProduct& s, std::size_t d);

} // namespace coembed
