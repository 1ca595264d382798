#include "coembed/poisson.hpp"

#include "coembed/errors.hpp"
#include "coembed/unknowns.hpp"

namespace coembed {

namespace {

void require_affine(const AlgebraPtr& a)
{
    if (a->kind() != AlgebraKind::commutative || !a->relations().empty()) {
        throw UnsupportedKind("Poisson structures live on polynomial rings without relations, '" + a->name() +
                              "' is not one");
    }
}

std::vector<Monomial> field_monomials(const AlgebraPtr& ring, std::size_t d) { return ring->monomials_up_to(d); }

// Poisson condition on one coordinate pair, linear in the field.
Polynomial pair_defect(const PoissonStructure& p, const VectorField& x, std::size_t i, std::size_t j)
{
    const auto& ring = p.ring();
    const Polynomial xi = Polynomial::generator(ring, i);
    const Polynomial xj = Polynomial::generator(ring, j);
    return x.apply(p.component(i, j)) - p.bracket(x.image(i), xj) - p.bracket(xi, x.image(j));
}

} // namespace

PoissonStructure::PoissonStructure(AlgebraPtr ring, std::map<std::pair<std::size_t, std::size_t>, Polynomial> components)
    : ring_(std::move(ring))
{
    require_affine(ring_);
    const std::size_t n = ring_->generator_count();
    for (auto& [key, value] : components) {
        const auto [i, j] = key;
        if (i >= j || j >= n) {
            throw InvalidInput("Poisson component indices must satisfy i < j < " + std::to_string(n));
        }
        if (!same_algebra(value.algebra(), ring_)) {
            throw ShapeMismatch("Poisson component lives in '" + value.algebra()->name() + "'");
        }
        if (!value.is_zero()) {
            components_.emplace(key, std::move(value));
        }
    }
}

PoissonStructure PoissonStructure::from_bivector(const VectorField& x, const VectorField& y)
{
    if (!same_algebra(x.algebra(), y.algebra())) {
        throw ShapeMismatch("bivector from vector fields on different algebras");
    }
    const auto& ring = x.algebra();
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> components;
    for (std::size_t j = 0; j < ring->generator_count(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            components.emplace(std::make_pair(i, j), x.image(i) * y.image(j) - x.image(j) * y.image(i));
        }
    }
    return PoissonStructure(ring, std::move(components));
}

Polynomial PoissonStructure::component(std::size_t i, std::size_t j) const
{
    if (i == j) {
        return Polynomial(ring_);
    }
    const bool flip = i > j;
    const auto it = components_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == components_.end()) {
        return Polynomial(ring_);
    }
    return flip ? -it->second : it->second;
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const
{
    Polynomial out(ring_);
    if (f.is_zero() || g.is_zero()) {
        return out;
    }
    const std::size_t n = ring_->generator_count();
    std::vector<Polynomial> df;
    std::vector<Polynomial> dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(partial_derivative(f, i));
        dg.push_back(partial_derivative(g, i));
    }
    for (const auto& [key, pij] : components_) {
        const auto [i, j] = key;
        out += pij * (df[i] * dg[j] - df[j] * dg[i]);
    }
    return out;
}

Polynomial jacobiator(const PoissonStructure& p, const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return p.bracket(f, p.bracket(g, h)) + p.bracket(g, p.bracket(h, f)) + p.bracket(h, p.bracket(f, g));
}

JacobiCheck jacobi_check(const PoissonStructure& p)
{
    JacobiCheck out;
    const auto& ring = p.ring();
    const std::size_t n = ring->generator_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Polynomial value = jacobiator(p, Polynomial::generator(ring, i), Polynomial::generator(ring, j),
                                              Polynomial::generator(ring, k));
                if (!value.is_zero()) {
                    out.ok = false;
                    out.failing_triple = std::array<std::size_t, 3>{i, j, k};
                    out.value = std::move(value);
                    return out;
                }
            }
        }
    }
    return out;
}

bool is_poisson_vector_field(const PoissonStructure& p, const VectorField& x)
{
    const std::size_t n = p.ring()->generator_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!pair_defect(p, x, i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

SolveReport solve_poisson_vector_fields(const PoissonStructure& p, std::size_t d,
                                        const std::optional<PoissonRestriction>& restriction)
{
    if (!jacobi_check(p).ok) {
        throw InvalidInput("Poisson structure fails the Jacobi identity");
    }
    const auto& ring = p.ring();
    const std::size_t n = ring->generator_count();
    PolynomialUnknowns unknowns(ring, n, field_monomials(ring, d));
    auto as_field = [&](const PolynomialUnknowns::Tuple& t) { return VectorField(ring, t); };

    SolveReport report;
    report.degree_bound = d;
    report.unknowns = unknowns.columns();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            unknowns.require_zero([&, i, j](const PolynomialUnknowns::Tuple& t) {
                return pair_defect(p, as_field(t), i, j);
            });
        }
    }
    report.constraints.push_back("poisson condition on coordinate pairs");

    if (restriction) {
        const auto& ideal = restriction->ideal;
        const auto& pi = restriction->quotient;
        if (!same_algebra(ideal.ambient(), ring) || !same_algebra(pi.domain(), ring) ||
            !same_algebra(restriction->target.algebra(), pi.codomain())) {
            throw ShapeMismatch("restriction data does not match the Poisson ring");
        }
        std::size_t slack = 0;
        for (const auto& g : ideal.generators()) {
            slack = std::max(slack, static_cast<std::size_t>(g.degree()));
        }
        report.membership_bound = d + slack;
        for (const auto& g : ideal.generators()) {
            unknowns.require_zero([&, g](const PolynomialUnknowns::Tuple& t) {
                return ideal.remainder(as_field(t).apply(g), report.membership_bound);
            });
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial rhs = reduce_relations(restriction->target.apply(pi.images()[i]));
            unknowns.require(
                [&, i](const PolynomialUnknowns::Tuple& t) { return reduce_relations(pi.apply(t[i])); }, rhs);
        }
        report.constraints.push_back("tangent to the ideal");
        report.constraints.push_back("restricts to the target");
    }

    report.equations = unknowns.equations();
    const auto solution = unknowns.solve();
    report.rank = solution.rank;
    if (!solution.feasible) {
        report.status = SolveStatus::infeasible_within_bound;
        return report;
    }
    for (const auto& v : solution.kernel) {
        report.basis.push_back(as_field(unknowns.assemble(v)));
    }
    if (restriction) {
        report.status = SolveStatus::affine_solution;
        report.particular = as_field(unknowns.assemble(solution.particular));
    }
    return report;
}

VectorField hamiltonian_vector_field(const PoissonStructure& p, const Polynomial& f)
{
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < p.ring()->generator_count(); ++i) {
        images.push_back(p.bracket(f, Polynomial::generator(p.ring(), i)));
    }
    return VectorField(p.ring(), std::move(images));
}

std::optional<Polynomial> is_hamiltonian(const PoissonStructure& p, const VectorField& x, std::size_t d)
{
    const auto& ring = p.ring();
    if (!same_algebra(x.algebra(), ring)) {
        throw ShapeMismatch("vector field and Poisson structure live on different algebras");
    }
    PolynomialUnknowns unknowns(ring, 1, field_monomials(ring, d));
    for (std::size_t i = 0; i < ring->generator_count(); ++i) {
        unknowns.require(
            [&, i](const PolynomialUnknowns::Tuple& t) {
                return p.bracket(t[0], Polynomial::generator(ring, i));
            },
            x.image(i));
    }
    const auto solution = unknowns.solve();
    if (!solution.feasible) {
        return std::nullopt;
    }
    return unknowns.assemble(solution.particular)[0];
}

std::string to_string(NormalizerClass c)
{
    switch (c) {
    case NormalizerClass::in_ideal:
        return "in-ideal";
    case NormalizerClass::in_normalizer:
        return "in-normalizer";
    case NormalizerClass::outside:
        return "outside";
    }
    return "?";
}

CoisotropyReport coisotropy_and_normalizer(const PoissonStructure& p, const Ideal& j, const std::optional<Polynomial>& f)
{
    if (!same_algebra(j.ambient(), p.ring())) {
        throw ShapeMismatch("ideal and Poisson structure live on different algebras");
    }
    CoisotropyReport out;
    const auto& gens = j.generators();
    for (std::size_t k = 0; k < gens.size() && out.coisotropic; ++k) {
        for (std::size_t l = k + 1; l < gens.size(); ++l) {
            if (!j.contains(p.bracket(gens[k], gens[l]))) {
                out.coisotropic = false;
                out.failing_pair = std::make_pair(k, l);
                break;
            }
        }
    }
    if (f) {
        if (j.contains(*f)) {
            out.classification = NormalizerClass::in_ideal;
        } else {
            bool normal = true;
            for (const auto& g : gens) {
                if (!j.contains(p.bracket(*f, g))) {
                    normal = false;
                    break;
                }
            }
            out.classification = normal ? NormalizerClass::in_normalizer : NormalizerClass::outside;
        }
    }
    return out;
}

} // namespace coembed
