#pragma once

#include "coembed/derivation.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace coembed {

// Vector fields on affine space are derivations of the polynomial ring.
using VectorField = Derivation;

// {f, g} = sum_{i<j} P_ij (d_i f d_j g - d_j f d_i g) on a relation-free
// commutative polynomial ring.
class PoissonStructure {
public:
    // Keys (i, j) with i < j; missing pairs are zero.
    PoissonStructure(AlgebraPtr ring, std::map<std::pair<std::size_t, std::size_t>, Polynomial> components);

    // P = X ^ Y, P_ij = X(x_i) Y(x_j) - X(x_j) Y(x_i).
    static PoissonStructure from_bivector(const VectorField& x, const VectorField& y);

    const AlgebraPtr& ring() const noexcept { return ring_; }
    // P_ij for any i, j (antisymmetric).
    Polynomial component(std::size_t i, std::size_t j) const;
    const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& components() const noexcept
    {
        return components_;
    }

    Polynomial bracket(const Polynomial& f, const Polynomial& g) const;

private:
    AlgebraPtr ring_;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> components_;
};

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Polynomial jacobiator(const PoissonStructure& p, const Polynomial& f, const Polynomial& g, const Polynomial& h);

struct JacobiCheck {
    bool ok = true;
    std::optional<std::array<std::size_t, 3>> failing_triple;
    // Jacobiator on the failing coordinate triple.
    std::optional<Polynomial> value;
};

// Coordinate triples i < j < k suffice: the Jacobiator is a derivation in
// each slot.
JacobiCheck jacobi_check(const PoissonStructure& p);

// X{x_i, x_j} = {X x_i, x_j} + {x_i, X x_j} for all i < j; enough because
// the defect (f, g) -> X{f,g} - {Xf,g} - {f,Xg} is a biderivation.
bool is_poisson_vector_field(const PoissonStructure& p, const VectorField& x);

struct PoissonRestriction {
    // Vanishing ideal of the subvariety; the field must be tangent to it.
    Ideal ideal;
    // Quotient map onto the coordinate ring of the subvariety.
    AlgebraHom quotient;
    // Vector field on the subvariety to be extended.
    Derivation target;
};

// Poisson vector fields with coefficients of degree <= d. With a
// restriction, only fields tangent to the ideal that push forward to the
// target; the report is then affine (particular + kernel) or infeasible.
// Throws InvalidInput when the structure fails the Jacobi identity.
SolveReport solve_poisson_vector_fields(const PoissonStructure& p, std::size_t d,
                                        const std::optional<PoissonRestriction>& restriction = std::nullopt);

// X_f = {f, .}.
VectorField hamiltonian_vector_field(const PoissonStructure& p, const Polynomial& f);

// f with deg f <= d and {f, x_i} = X(x_i) for all i (constant part zero).
std::optional<Polynomial> is_hamiltonian(const PoissonStructure& p, const VectorField& x, std::size_t d);

enum class NormalizerClass { in_ideal, in_normalizer, outside };
std::string to_string(NormalizerClass c);

struct CoisotropyReport {
    bool coisotropic = true;
    // First generator pair (k, l) with {g_k, g_l} outside J.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::optional<NormalizerClass> classification;
};

// J is coisotropic iff {g_k, g_l} is in J for its generators; f is in the
// normalizer iff {f, g_k} is in J for all k.
CoisotropyReport coisotropy_and_normalizer(const PoissonStructure& p, const Ideal& j,
                                           const std::optional<Polynomial>& f = std::nullopt);

} // namespace coembed
