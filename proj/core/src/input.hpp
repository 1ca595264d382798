#pragma once

#include "coembed/algebra.hpp"
#include "coembed/derivation.hpp"
#include "coembed/ideal.hpp"
#include "coembed/morphism.hpp"
#include "coembed/poisson.hpp"
#include "coembed/starprod.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coembed::io {

using Json = nlohmann::ordered_json;

struct NamedDerivation {
    std::string name;
    Derivation derivation;
};

// Input file: algebras, and optionally a hom, targets, ideals, a Poisson
// structure or a star product, all referring to algebras by name.
class Document {
public:
    Document(Json root, ConfluencePolicy policy = ConfluencePolicy::enforce);
    // Throws InvalidInput on malformed JSON.
    static Document parse(std::string_view text, ConfluencePolicy policy = ConfluencePolicy::enforce);

    const Json& root() const noexcept { return root_; }
    bool has(const char* key) const { return root_.contains(key); }

    const std::vector<AlgebraPtr>& algebras() const noexcept { return algebras_; }
    const AlgebraPtr& algebra(const std::string& name) const;
    // The algebra named by root[key]["algebra"] if present, else the first one.
    const AlgebraPtr& algebra_for(const char* key) const;

    std::optional<std::size_t> size_option(const char* key) const;

    Polynomial polynomial(const Json& expr, const AlgebraPtr& algebra) const;
    std::vector<Polynomial> polynomials(const Json& list, const AlgebraPtr& algebra) const;
    // {gen: expr} over the generators of `domain`, valued in `codomain`;
    // generators left out map to 0.
    std::vector<Polynomial> images(const Json& map, const AlgebraPtr& domain, const AlgebraPtr& codomain) const;

    AlgebraHom hom() const;
    std::optional<Ideal> kernel() const;
    // root[key] = {"algebra"?, "generators": [...]} or a bare list.
    Ideal ideal(const char* key, const AlgebraPtr& fallback) const;
    // [{name, images} | {name, inner: expr}] on `algebra`.
    std::vector<NamedDerivation> derivations(const char* key, const AlgebraPtr& algebra) const;

    PoissonStructure poisson() const;
    // An explicit order overrides the file; exp stanzas are rebuilt at that
    // order, explicit operator lists are truncated.
    StarProduct star(std::optional<std::size_t> order) const;

private:
    Json root_;
    std::vector<AlgebraPtr> algebras_;
};

AlgebraPtr load_algebra(const Json& node, ConfluencePolicy policy);

} // namespace coembed::io
