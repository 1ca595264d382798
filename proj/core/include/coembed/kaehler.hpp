#pragma once

#include "coembed/derivation.hpp"

#include <cstddef>
#include <vector>

namespace coembed {

// An element sum_i a_i dx_i of the free module on the dx_i.
using Differential = std::vector<Polynomial>;

// Omega_{B/K} for B = K[x]/I, presented as the free module on dx_1..dx_n
// modulo the Jacobian rows (dr_k/dx_1, ..., dr_k/dx_n) of the generators of
// I. Entries are reduced modulo I.
struct KaehlerPresentation {
    AlgebraPtr base;
    std::vector<Differential> rows;

    std::size_t rank() const noexcept { return base->generator_count(); }
};

// Throws UnsupportedKind for non-commutative algebras.
KaehlerPresentation kaehler_presentation(const AlgebraPtr& algebra);

// The universal derivation: df = sum_i (df/dx_i) dx_i, entries reduced.
Differential universal_d(const Polynomial& f);

// f = (f_1..f_n) defines a module map Omega -> B (dx_i -> f_i) iff
// sum_i f_i * row_k[i] lies in I for every row.
bool is_module_map(const KaehlerPresentation& omega, const std::vector<Polynomial>& f);

struct HomDerCorrespondence {
    std::size_t degree_bound = 0;
    // Basis of module maps Omega -> B with deg f_i <= d.
    std::vector<std::vector<Polynomial>> module_maps;
    // derivations[k] = module_maps[k] o d, i.e. D(x_i) = f_i.
    std::vector<Derivation> derivations;
};

HomDerCorrespondence hom_der_correspondence(const KaehlerPresentation& omega, std::size_t d);

// Matrix of pi_**: row i expresses pi_**(dx_i) = d(pi(x_i)) in the dy_j.
// Both algebras commutative.
std::vector<Differential> induced_map(const AlgebraHom& pi);

// pi_**(sum_i a_i dx_i) = sum_i pi(a_i) pi_**(dx_i), entries reduced.
Differential apply_induced(const AlgebraHom& pi, const std::vector<Differential>& matrix, const Differential& w);

// Every dy_j is a B-combination, with coefficients of degree <= bound, of
// the rows of the induced map and of the relation rows of Omega_B; decided
// by an exact linear solve.
bool induced_map_surjective(const AlgebraHom& pi, std::size_t bound);

} // namespace coembed
