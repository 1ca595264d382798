#pragma once

#include "coembed/ideal.hpp"
#include "coembed/morphism.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coembed {

// A derivation of an algebra, given by the images of its generators.
class Derivation {
public:
    Derivation(AlgebraPtr algebra, std::vector<Polynomial> images);

    static Derivation zero(const AlgebraPtr& algebra);
    // ad_x = [x, .].
    static Derivation inner(const Polynomial& x);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    const Polynomial& image(std::size_t gen) const { return images_.at(gen); }

    // Leibniz extension to words: D(x_a x_b ...) = D(x_a) x_b ... + x_a D(x_b) ... .
    // Applied to the free-cover words of `terms`, products taken in the
    // algebra. Not reduced modulo relations.
    Polynomial apply_words(const Terms& terms) const;
    Polynomial apply(const Polynomial& p) const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator*=(const Scalar& c);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator*(Derivation a, const Scalar& c) { return a *= c; }

private:
    AlgebraPtr algebra_;
    std::vector<Polynomial> images_;
};

// Same algebra and images equal modulo the relations.
bool equivalent(const Derivation& a, const Derivation& b);

// Linear-span relations between finite families of derivations of one
// algebra, comparing images modulo the relations.
bool in_span(const std::vector<Derivation>& family, const Derivation& d);
bool same_span(const std::vector<Derivation>& a, const std::vector<Derivation>& b);

struct DerivationCheck {
    bool ok = true;
    std::vector<std::size_t> failing_relations;
    // Reduced Leibniz image of each failing relation.
    std::vector<Polynomial> defects;
};

// The Leibniz extension maps every relation into the relation ideal.
DerivationCheck check_derivation(const Derivation& d);

enum class SolveStatus { basis, affine_solution, infeasible_within_bound };
std::string to_string(SolveStatus status);

struct PushforwardConstraint {
    AlgebraHom hom;
    Derivation target;
};

struct SolveOptions {
    // D(J) inside J (J an ideal of the algebra being solved over).
    std::optional<Ideal> preserve;
    // pi(D(x_i)) = target(pi(x_i)) for every generator.
    std::optional<PushforwardConstraint> pushforward;
};

struct SolveReport {
    // Bound on deg D(x_i).
    std::size_t degree_bound = 0;
    // Degree at which noncommutative membership spans are truncated.
    std::size_t membership_bound = 0;
    SolveStatus status = SolveStatus::basis;
    std::vector<std::string> constraints;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    // Basis of the homogeneous solutions (the kernel in the affine case).
    std::vector<Derivation> basis;
    std::optional<Derivation> particular;

    bool feasible() const noexcept { return status != SolveStatus::infeasible_within_bound; }
    std::size_t dimension() const noexcept { return basis.size(); }
};

// Derivations with deg D(x_i) <= d, D(x_i) ranging over the standard
// monomials of the algebra, subject to the optional constraints. Unknowns
// are ordered generator-major, monomials increasing, so the particular
// solution (free unknowns set to zero) prefers low degrees.
SolveReport solve_derivations(const AlgebraPtr& algebra, std::size_t d, const SolveOptions& options = {});

// The derivation D~ of B with D~ o pi = pi o D, defined through the
// witnesses: D~(y) = pi(D(witness(y))). Throws NotInDerPi unless D~ is a
// derivation agreeing with pi o D on the generators of A, and, when
// `kernel` is given, D maps its generators into ker pi.
Derivation pushforward(const Derivation& d, const AlgebraHom& pi, const std::optional<Ideal>& kernel = std::nullopt);

// x with deg x <= d and [x, g] = D(g) for every generator g, if one exists.
// The witness is the echelon representative (central part set to zero).
std::optional<Polynomial> is_inner(const Derivation& d, std::size_t bound);

// Lift through a hom out of a free algebra: D_A(x) = lift(D~(pi(x))).
Derivation free_lift(const AlgebraHom& pi, const Derivation& target);

// D~ on A1 (x) A2: zero on A1's generators, D on A2's.
Derivation tensor_lift(const TensorProduct& product, const Derivation& d);

// eps (x) id: A1 (x) A2 -> A2 for an augmentation eps of A1 (a hom into the
// algebra with no generators), witnessed through the right inclusion.
AlgebraHom augmentation_map(const TensorProduct& product, const AlgebraHom& eps);

// x -> [[x, images(x)], [0, x]] extends to a homomorphism into 2x2 matrices
// over the algebra: every relation evaluates to the zero matrix.
bool admissibility_check(const AlgebraPtr& algebra, const std::vector<Polynomial>& images);

} // namespace coembed
