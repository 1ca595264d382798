#pragma once

#include "coembed/monomial.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coembed {

enum class AlgebraKind { free, commutative, pbw };
enum class ScalarField { rational, gaussian };

std::string to_string(AlgebraKind kind);
std::string to_string(ScalarField field);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Raw description of a presentation. Relations are linear combinations of
// words in the generators (free-algebra expressions).
struct AlgebraSpec {
    std::string name;
    AlgebraKind kind = AlgebraKind::commutative;
    ScalarField field = ScalarField::rational;
    std::vector<std::string> generators;
    std::vector<Terms> relations;
};

enum class ConfluencePolicy {
    // Reject PBW presentations whose overlaps do not resolve.
    enforce,
    // Build anyway; check_pbw_confluence reports the failing triples.
    report,
};

// A finitely presented algebra: free K<x>, commutative K[x]/I, or a PBW
// algebra with rewriting rules x_j x_i -> x_i x_j + q_ji (j > i).
//
// Only shared, immutable instances exist; polynomials keep an AlgebraPtr.
class Algebra {
public:
    // Throws InvalidInput when the presentation is malformed.
    static AlgebraPtr create(AlgebraSpec spec, ConfluencePolicy policy = ConfluencePolicy::enforce);

    // Convenience constructors for algebras without relations.
    static AlgebraPtr free(std::string name, std::vector<std::string> generators,
                           ScalarField field = ScalarField::rational);
    static AlgebraPtr polynomial_ring(std::string name, std::vector<std::string> generators,
                                      ScalarField field = ScalarField::rational);

    const std::string& name() const noexcept { return name_; }
    AlgebraKind kind() const noexcept { return kind_; }
    ScalarField field() const noexcept { return field_; }
    const std::vector<std::string>& generators() const noexcept { return generators_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }
    std::optional<std::size_t> index_of(const std::string& generator) const;

    // Relations as given (commutative: exponents merged). For PBW algebras these
    // are the commutation relations x_j x_i - x_i x_j - q_ji, which vanish
    // identically on normal forms.
    const std::vector<Terms>& relations() const noexcept { return relations_; }
    std::size_t max_relation_degree() const;

    // Tail q_ji of the rule x_j x_i -> x_i x_j + q_ji, j > i (PBW only).
    const Terms& pbw_tail(std::size_t j, std::size_t i) const;

    // free: identity; commutative: sort letters and merge; pbw: rewrite to
    // sorted words. Throws RewriteBudgetExceeded if rewriting does not settle.
    Terms normal_form(const Terms& terms) const;
    Terms multiply(const Terms& a, const Terms& b) const;

    // Normal monomials of the free cover with degree <= d, in increasing
    // degrevlex order. Commutative quotients: relations are NOT taken into
    // account here (see Ideal::standard_monomials).
    std::vector<Monomial> monomials_up_to(std::size_t d) const;

    bool is_normal(const Monomial& m) const noexcept;

    // Same scalars and generator names; used to tell "same algebra" apart
    // from "equal pointers" when algebras are re-created from files.
    bool same_presentation(const Algebra& other) const;

private:
    Algebra() = default;

    Terms rewrite_pbw(const Terms& terms) const;
    void install_pbw_rules();

    std::string name_;
    AlgebraKind kind_ = AlgebraKind::commutative;
    ScalarField field_ = ScalarField::rational;
    std::vector<std::string> generators_;
    std::vector<Terms> relations_;
    // pbw_tails_[j * n + i] for j > i.
    std::vector<Terms> pbw_tails_;
};

// Both algebras are the same object or have identical presentations.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct ConfluenceFailure {
    std::size_t k = 0, j = 0, i = 0;
    // Normal forms reached after first rewriting x_k x_j, resp. x_j x_i.
    Terms via_left;
    Terms via_right;
};

struct ConfluenceReport {
    bool confluent = true;
    std::vector<ConfluenceFailure> failures;
};

// Resolves every overlap x_k x_j x_i (k > j > i) along both first steps.
// Throws UnsupportedKind for non-PBW algebras.
ConfluenceReport check_pbw_confluence(const Algebra& algebra);

} // namespace coembed
