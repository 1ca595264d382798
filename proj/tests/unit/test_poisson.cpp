#include "coembed/errors.hpp"
#include "coembed/ideal.hpp"
#include "coembed/morphism.hpp"
#include "coembed/poisson.hpp"

#include "builders.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coembed;
using fixture::poly;
using fixture::polys;

namespace {

using Components = std::map<std::pair<std::size_t, std::size_t>, Polynomial>;

AlgebraPtr plane() { return fixture::ring("R", {"x", "y"}); }

PoissonStructure kappa(const AlgebraPtr& r) { return PoissonStructure(r, Components{{{0, 1}, poly(r, "y")}}); }

PoissonStructure symplectic(const AlgebraPtr& r) { return PoissonStructure(r, Components{{{0, 1}, poly(r, "1")}}); }

PoissonStructure so3(const AlgebraPtr& r)
{
    return PoissonStructure(r, Components{{{0, 1}, poly(r, "z")}, {{1, 2}, poly(r, "x")}, {{0, 2}, poly(r, "-y")}});
}

VectorField field(const AlgebraPtr& r, const std::vector<std::string>& coeffs)
{
    return VectorField(r, polys(r, coeffs));
}

// {f, g} computed on exponent maps from the components.
oracle::Poly oracle_bracket(const PoissonStructure& p, const oracle::Poly& f, const oracle::Poly& g)
{
    oracle::Poly out;
    for (const auto& [key, value] : p.components()) {
        const auto [i, j] = key;
        const oracle::Poly pij = oracle::from_library(value);
        const oracle::Poly term = oracle::plus(oracle::times(oracle::diff(f, i), oracle::diff(g, j)),
                                               oracle::times(oracle::diff(f, j), oracle::diff(g, i)), -1);
        out = oracle::plus(out, oracle::times(pij, term));
    }
    return out;
}

} // namespace

TEST(Bracket, Examples)
{
    const auto r = plane();
    EXPECT_EQ(kappa(r).bracket(poly(r, "x"), poly(r, "y")), poly(r, "y"));
    EXPECT_EQ(symplectic(r).bracket(poly(r, "x"), poly(r, "y")), poly(r, "1"));
    const auto k = PoissonStructure::from_bivector(field(r, {"1", "0"}), field(r, {"0", "y"}));
    EXPECT_EQ(k.component(0, 1), poly(r, "y"));
    EXPECT_EQ(k.component(1, 0), poly(r, "-y"));
}

TEST(Bracket, AgreesWithOracleAndIsAntisymmetricLeibniz)
{
    std::mt19937_64 rng(71);
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    const auto r2 = plane();
    const std::vector<PoissonStructure> structures{kappa(r2), symplectic(r2), so3(r3)};
    for (int n = 0; n < 210; ++n) {
        const auto& p = structures[static_cast<std::size_t>(n) % structures.size()];
        const Polynomial f = oracle::random_polynomial(p.ring(), rng, 3, 4);
        const Polynomial g = oracle::random_polynomial(p.ring(), rng, 3, 4);
        const Polynomial h = oracle::random_polynomial(p.ring(), rng, 2, 3);
        EXPECT_EQ(oracle::from_library(p.bracket(f, g)),
                  oracle_bracket(p, oracle::from_library(f), oracle::from_library(g)));
        EXPECT_EQ(p.bracket(f, g), -p.bracket(g, f));
        EXPECT_TRUE(p.bracket(f, f).is_zero());
        EXPECT_EQ(p.bracket(f, g * h), p.bracket(f, g) * h + g * p.bracket(f, h));
    }
}

TEST(Jacobi, Examples)
{
    const auto r2 = plane();
    EXPECT_TRUE(jacobi_check(kappa(r2)).ok);
    EXPECT_TRUE(jacobi_check(PoissonStructure(r2, Components{{{0, 1}, poly(r2, "x^3*y + y^2")}})).ok);
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    EXPECT_TRUE(jacobi_check(so3(r3)).ok);
    const PoissonStructure broken(r3,
                                  Components{{{0, 1}, poly(r3, "z")}, {{1, 2}, poly(r3, "x")}, {{0, 2}, poly(r3, "-x")}});
    const auto check = jacobi_check(broken);
    EXPECT_FALSE(check.ok);
    ASSERT_TRUE(check.failing_triple);
    EXPECT_EQ(*check.failing_triple, (std::array<std::size_t, 3>{0, 1, 2}));
    EXPECT_EQ(*check.value, poly(r3, "-z"));
}

TEST(Jacobi, VanishesOnPolynomialTriples)
{
    std::mt19937_64 rng(72);
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    const auto r2 = plane();
    const std::vector<PoissonStructure> structures{so3(r3), kappa(r2)};
    for (int n = 0; n < 200; ++n) {
        const auto& p = structures[static_cast<std::size_t>(n) % structures.size()];
        const Polynomial f = oracle::random_polynomial(p.ring(), rng, 2, 3);
        const Polynomial g = oracle::random_polynomial(p.ring(), rng, 2, 3);
        const Polynomial h = oracle::random_polynomial(p.ring(), rng, 2, 3);
        EXPECT_TRUE(jacobiator(p, f, g, h).is_zero());
    }
}

TEST(PoissonFields, KappaStructure)
{
    const auto r = plane();
    const auto p = kappa(r);
    // The true condition for {x,y} = y reads b = y (da/dx + db/dy).
    EXPECT_TRUE(is_poisson_vector_field(p, field(r, {"-x*y", "y^2"})));
    EXPECT_FALSE(is_poisson_vector_field(p, field(r, {"-x*y", "y"})));
    EXPECT_TRUE(is_poisson_vector_field(p, field(r, {"1", "0"})));
    EXPECT_FALSE(is_poisson_vector_field(p, field(r, {"x", "0"})));

    const auto report = solve_poisson_vector_fields(p, 3);
    EXPECT_EQ(report.status, SolveStatus::basis);
    EXPECT_TRUE(in_span(report.basis, field(r, {"-x*y", "y^2"})));
    EXPECT_FALSE(in_span(report.basis, field(r, {"-x*y", "y"})));
    EXPECT_TRUE(in_span(report.basis, field(r, {"1", "0"})));
    // a(x, 0) is constant for every solution.
    const auto line = fixture::ring("L", {"x"});
    const AlgebraHom restrict(r, line, polys(line, {"x", "0"}));
    for (const auto& x : report.basis) {
        EXPECT_TRUE(is_poisson_vector_field(p, x));
        EXPECT_LE(restrict.apply(x.image(0)).degree(), 0);
    }
}

TEST(PoissonFields, RestrictionLadder)
{
    const auto r = plane();
    const auto p = kappa(r);
    const auto line = fixture::ring("L", {"x"});
    const AlgebraHom quotient(r, line, polys(line, {"x", "0"}), polys(r, {"x"}));
    const Ideal axis(r, polys(r, {"y"}));
    for (std::size_t d = 1; d <= 5; ++d) {
        const PoissonRestriction scaling{axis, quotient, VectorField(line, polys(line, {"x"}))};
        EXPECT_EQ(solve_poisson_vector_fields(p, d, scaling).status, SolveStatus::infeasible_within_bound)
            << "d = " << d;
        const PoissonRestriction constant{axis, quotient, VectorField(line, polys(line, {"1"}))};
        const auto ok = solve_poisson_vector_fields(p, d, constant);
        ASSERT_EQ(ok.status, SolveStatus::affine_solution) << "d = " << d;
        const auto& x = *ok.particular;
        EXPECT_TRUE(is_poisson_vector_field(p, x));
        EXPECT_TRUE(ideal_member(axis, x.image(1)));
        EXPECT_EQ(quotient.apply(x.image(0)), poly(line, "1"));
    }
}

TEST(PoissonFields, RejectsNonJacobi)
{
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    const PoissonStructure broken(r3,
                                  Components{{{0, 1}, poly(r3, "z")}, {{1, 2}, poly(r3, "x")}, {{0, 2}, poly(r3, "-x")}});
    EXPECT_THROW(solve_poisson_vector_fields(broken, 1), InvalidInput);
}

TEST(Hamiltonian, Examples)
{
    const auto r = plane();
    const auto s = symplectic(r);
    const auto xf = hamiltonian_vector_field(s, poly(r, "-x*y"));
    EXPECT_EQ(xf.images(), polys(r, {"x", "-y"}));
    EXPECT_EQ(hamiltonian_vector_field(s, poly(r, "7")).images(), polys(r, {"0", "0"}));
    EXPECT_EQ(hamiltonian_vector_field(kappa(r), poly(r, "y")).images(), polys(r, {"-y", "0"}));

    const auto f = is_hamiltonian(s, field(r, {"x", "-y"}), 3);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, poly(r, "-x*y"));
    for (std::size_t d = 0; d <= 4; ++d) {
        EXPECT_FALSE(is_hamiltonian(s, field(r, {"x", "y"}), d));
    }
    const auto zero = is_hamiltonian(s, field(r, {"0", "0"}), 2);
    ASSERT_TRUE(zero);
    EXPECT_TRUE(zero->is_zero());
}

TEST(Hamiltonian, FieldsArePoissonAndSatisfyProductRule)
{
    std::mt19937_64 rng(73);
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    const auto r2 = plane();
    const std::vector<PoissonStructure> structures{so3(r3), kappa(r2), symplectic(r2)};
    const Ideal axis(r2, polys(r2, {"y"}));
    for (int n = 0; n < 201; ++n) {
        const auto& p = structures[static_cast<std::size_t>(n) % structures.size()];
        const Polynomial f = oracle::random_polynomial(p.ring(), rng, 3, 3);
        const Polynomial g = oracle::random_polynomial(p.ring(), rng, 3, 3);
        const auto xf = hamiltonian_vector_field(p, f);
        EXPECT_TRUE(is_poisson_vector_field(p, xf));
        const auto xfg = hamiltonian_vector_field(p, f * g);
        const auto xg = hamiltonian_vector_field(p, g);
        for (std::size_t i = 0; i < p.ring()->generator_count(); ++i) {
            EXPECT_EQ(xfg.image(i), f * xg.image(i) + g * xf.image(i));
        }
        if (n % 3 == 1) {
            // <y> is a Poisson ideal for {x,y} = y: X_f is tangent to it.
            EXPECT_TRUE(ideal_member(axis, xf.apply(poly(r2, "y"))));
        }
    }
}

TEST(Hamiltonian, SymplecticPlaneFieldsAreHamiltonian)
{
    const auto r = plane();
    const auto s = symplectic(r);
    for (std::size_t d = 0; d <= 4; ++d) {
        const auto report = solve_poisson_vector_fields(s, d);
        // Potentials of degree <= d + 1 modulo constants.
        EXPECT_EQ(report.dimension(), oracle::exponents_up_to(2, static_cast<unsigned>(d + 1)).size() - 1);
        for (const auto& x : report.basis) {
            const auto f = is_hamiltonian(s, x, d + 1);
            ASSERT_TRUE(f);
            EXPECT_TRUE(equivalent(hamiltonian_vector_field(s, *f), x));
        }
    }
}

TEST(Coisotropy, Examples)
{
    const auto r = plane();
    const Ideal axis(r, polys(r, {"y"}));
    const auto s = symplectic(r);
    const auto a = coisotropy_and_normalizer(s, axis, poly(r, "x"));
    EXPECT_TRUE(a.coisotropic);
    EXPECT_EQ(a.classification, NormalizerClass::outside);
    EXPECT_EQ(coisotropy_and_normalizer(s, axis, poly(r, "y^2")).classification, NormalizerClass::in_ideal);
    EXPECT_EQ(coisotropy_and_normalizer(s, axis, poly(r, "y*x + y")).classification, NormalizerClass::in_ideal);

    const auto k = kappa(r);
    for (const auto* f : {"x", "x^2 + x", "x^3 + 2*y + 2"}) {
        const auto c = coisotropy_and_normalizer(k, axis, poly(r, f));
        EXPECT_TRUE(c.coisotropic);
        EXPECT_EQ(c.classification, NormalizerClass::in_normalizer) << f;
    }

    const Ideal point(r, polys(r, {"x", "y"}));
    const auto c = coisotropy_and_normalizer(s, point);
    EXPECT_FALSE(c.coisotropic);
    EXPECT_EQ(c.failing_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_FALSE(c.classification);
}
