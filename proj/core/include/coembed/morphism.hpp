#pragma once

#include "coembed/diffop.hpp"
#include "coembed/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coembed {

// A homomorphism A -> B given by the images of A's generators, optionally
// declared surjective by a preimage witness for each generator of B.
class AlgebraHom {
public:
    AlgebraHom(AlgebraPtr domain, AlgebraPtr codomain, std::vector<Polynomial> images,
               std::optional<std::vector<Polynomial>> witnesses = std::nullopt);

    static AlgebraHom identity(const AlgebraPtr& algebra);
    // Cover -> quotient on the same generator names, generators to themselves,
    // witnessed by the same assignment.
    static AlgebraHom quotient_map(const AlgebraPtr& cover, const AlgebraPtr& quotient);

    const AlgebraPtr& domain() const noexcept { return domain_; }
    const AlgebraPtr& codomain() const noexcept { return codomain_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    bool witnessed() const noexcept { return witnesses_.has_value(); }
    // Throws InvalidInput when the hom carries no witnesses.
    const std::vector<Polynomial>& witnesses() const;

    Polynomial apply(const Polynomial& p) const;
    // A preimage of q obtained by substituting the witnesses; requires
    // witnesses. pi(lift(q)) equals q modulo the relations of B whenever
    // check_hom passes.
    Polynomial lift(const Polynomial& q) const;

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    std::vector<Polynomial> images_;
    std::optional<std::vector<Polynomial>> witnesses_;
};

struct HomCheck {
    bool ok = true;
    // Indices of domain relations whose image is not zero in B, with the
    // reduced image.
    std::vector<std::size_t> failing_relations;
    std::vector<Polynomial> relation_images;
    // Indices of codomain generators y with pi(witness(y)) != y.
    std::vector<std::size_t> failing_witnesses;
};

// Relations of A map to zero in B, and witnesses (when present) map back to
// the generators of B.
HomCheck check_hom(const AlgebraHom& f);

// g o f. Throws ShapeMismatch unless codomain(f) is domain(g). Witnesses
// are composed when both maps carry them.
AlgebraHom compose(const AlgebraHom& f, const AlgebraHom& g);

struct TensorProduct {
    AlgebraPtr algebra;
    AlgebraHom left;
    AlgebraHom right;
};

// A1 (x) A2 on the disjoint union of the generators, A1's first. Both
// commutative gives a commutative algebra; PBW algebras and relation-free
// algebras give a PBW algebra with the cross commutators as extra rules;
// anything else gives a free algebra with relations. Throws ShapeMismatch on
// different scalar fields and InvalidInput on clashing generator names.
TensorProduct tensor_product(const AlgebraPtr& a1, const AlgebraPtr& a2, std::string name = {});

// pi = sum_k h^k pi_k with pi_k = pi_0 o T_k (k = 1..r), T_k differential
// operators on the commutative domain.
class FormalHom {
public:
    FormalHom(AlgebraHom base, std::vector<DiffOperator> corrections);

    std::size_t order() const noexcept { return corrections_.size(); }
    const AlgebraHom& base() const noexcept { return base_; }
    const std::vector<DiffOperator>& corrections() const noexcept { return corrections_; }

    // pi_k(f); k = 0 is the base hom.
    Polynomial component(std::size_t k, const Polynomial& f) const;
    // Cauchy product of the pi_k with the coefficients of f, truncated at
    // the order of f (which must not exceed order()).
    PolySeries apply(const PolySeries& f) const;

private:
    AlgebraHom base_;
    std::vector<DiffOperator> corrections_;
};

// f with pi(f) = g modulo h^{r+1}, built order by order:
// f_k = lift(g_k - sum_{j=1..k} pi_j(f_{k-j})).
PolySeries formal_preimage(const FormalHom& pi, const PolySeries& g);

} // namespace coembed
