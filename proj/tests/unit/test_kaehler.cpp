#include "coembed/derivation.hpp"
#include "coembed/errors.hpp"
#include "coembed/ideal.hpp"
#include "coembed/kaehler.hpp"

#include "builders.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coembed;
using fixture::poly;
using fixture::polys;

namespace {

Differential reduced(const Differential& w)
{
    Differential out;
    for (const auto& p : w) {
        out.push_back(reduce_relations(p));
    }
    return out;
}

Differential combine(const Polynomial& a, const Differential& u, const Polynomial& b, const Differential& v)
{
    Differential out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.push_back(a * u[i] + b * v[i]);
    }
    return reduced(out);
}

} // namespace

TEST(KaehlerPresentation, Rows)
{
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto omega = kaehler_presentation(cross);
    ASSERT_EQ(omega.rows.size(), 1u);
    EXPECT_EQ(omega.rows[0], polys(cross, {"y", "x"}));
    EXPECT_EQ(omega.rank(), 2u);

    EXPECT_TRUE(kaehler_presentation(fixture::ring("L", {"x"})).rows.empty());

    const auto dual = fixture::quotient("D", {"e"}, {"e^2"});
    const auto od = kaehler_presentation(dual);
    ASSERT_EQ(od.rows.size(), 1u);
    EXPECT_EQ(od.rows[0], polys(dual, {"2*e"}));

    EXPECT_THROW(kaehler_presentation(fixture::usb2()), UnsupportedKind);
}

TEST(KaehlerPresentation, RowEntriesAreReduced)
{
    const auto a = fixture::quotient("A", {"x", "y"}, {"x^2 - y", "x*y"});
    for (const auto& row : kaehler_presentation(a).rows) {
        EXPECT_EQ(row, reduced(row));
    }
}

TEST(ModuleMaps, DoublePoint)
{
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto omega = kaehler_presentation(cross);
    EXPECT_TRUE(is_module_map(omega, polys(cross, {"x", "0"})));
    EXPECT_TRUE(is_module_map(omega, polys(cross, {"0", "y"})));
    EXPECT_FALSE(is_module_map(omega, polys(cross, {"1", "0"})));
    const auto corr = hom_der_correspondence(omega, 1);
    EXPECT_EQ(corr.module_maps.size(), 2u);
    EXPECT_TRUE(same_span(corr.derivations, {Derivation(cross, polys(cross, {"x", "0"})),
                                             Derivation(cross, polys(cross, {"0", "y"}))}));
}

TEST(ModuleMaps, FreeOmegaHasNoConstraints)
{
    const auto plane = fixture::ring("P", {"x", "y"});
    for (unsigned d = 0; d <= 3; ++d) {
        EXPECT_EQ(hom_der_correspondence(kaehler_presentation(plane), d).module_maps.size(),
                  2 * oracle::exponents_up_to(2, d).size());
    }
}

TEST(Correspondence, MatchesDerivationSolver)
{
    const std::vector<AlgebraPtr> algebras{fixture::quotient("A", {"x", "y"}, {"x*y"}),
                                           fixture::quotient("D", {"e"}, {"e^2"}),
                                           fixture::quotient("C", {"x", "y"}, {"x^2 + y^2 - 1"}),
                                           fixture::quotient("Q", {"x", "y"}, {"x^2 - y", "x*y"})};
    for (const auto& a : algebras) {
        for (std::size_t d = 0; d <= 2; ++d) {
            const auto omega = kaehler_presentation(a);
            const auto corr = hom_der_correspondence(omega, d);
            ASSERT_EQ(corr.module_maps.size(), corr.derivations.size());
            for (std::size_t k = 0; k < corr.module_maps.size(); ++k) {
                EXPECT_TRUE(is_module_map(omega, corr.module_maps[k]));
                EXPECT_EQ(corr.derivations[k].images(), corr.module_maps[k]);
                EXPECT_TRUE(check_derivation(corr.derivations[k]).ok);
            }
            const auto solved = solve_derivations(a, d).basis;
            EXPECT_EQ(solved.size(), corr.derivations.size()) << a->name() << " d = " << d;
            EXPECT_TRUE(same_span(solved, corr.derivations)) << a->name() << " d = " << d;
        }
    }
}

TEST(UniversalDerivation, LeibnizOnSamples)
{
    std::mt19937_64 rng(61);
    const std::vector<AlgebraPtr> algebras{fixture::quotient("A", {"x", "y"}, {"x*y"}),
                                           fixture::quotient("C", {"x", "y"}, {"x^2 + y^2 - 1"})};
    for (int n = 0; n < 200; ++n) {
        const auto& a = algebras[static_cast<std::size_t>(n) % algebras.size()];
        const Polynomial p = oracle::random_polynomial(a, rng, 3, 3);
        const Polynomial q = oracle::random_polynomial(a, rng, 3, 3);
        EXPECT_EQ(universal_d(p * q), combine(p, universal_d(q), q, universal_d(p)));
    }
}

TEST(InducedMap, Examples)
{
    const auto plane = fixture::ring("P", {"x", "y"});
    const auto line = fixture::ring("L", {"x"});
    const AlgebraHom restrict(plane, line, polys(line, {"x", "0"}), polys(plane, {"x"}));
    const auto m1 = induced_map(restrict);
    ASSERT_EQ(m1.size(), 2u);
    EXPECT_EQ(m1[0], polys(line, {"1"}));
    EXPECT_EQ(m1[1], polys(line, {"0"}));

    const auto t = fixture::ring("T", {"t"});
    const auto dual = fixture::quotient("D", {"e"}, {"e^2"});
    EXPECT_EQ(induced_map(AlgebraHom(t, dual, polys(dual, {"e"})))[0], polys(dual, {"1"}));

    const auto uv = fixture::ring("U", {"u", "v"});
    const AlgebraHom square(plane, uv, polys(uv, {"u^2", "v"}));
    const auto m3 = induced_map(square);
    EXPECT_EQ(m3[0], polys(uv, {"2*u", "0"}));
    EXPECT_EQ(m3[1], polys(uv, {"0", "1"}));
}

TEST(InducedMap, CommutesWithUniversalDerivation)
{
    std::mt19937_64 rng(62);
    const auto plane = fixture::ring("P", {"x", "y"});
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto line = fixture::ring("L", {"x"});
    const auto uv = fixture::ring("U", {"u", "v"});
    const std::vector<AlgebraHom> maps{AlgebraHom(cross, line, polys(line, {"x", "0"})),
                                       AlgebraHom(plane, uv, polys(uv, {"u^2", "v - u"})),
                                       AlgebraHom::quotient_map(plane, cross)};
    for (int n = 0; n < 200; ++n) {
        const auto& pi = maps[static_cast<std::size_t>(n) % maps.size()];
        const auto matrix = induced_map(pi);
        const Polynomial f = oracle::random_polynomial(pi.domain(), rng, 3, 4);
        EXPECT_EQ(apply_induced(pi, matrix, universal_d(f)), universal_d(pi.apply(f)));
    }
}

TEST(InducedMap, SurjectivityForWitnessedMaps)
{
    const auto plane = fixture::ring("P", {"x", "y"});
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto line = fixture::ring("L", {"x"});
    const auto t = fixture::ring("T", {"t"});
    const auto dual = fixture::quotient("D", {"e"}, {"e^2"});
    EXPECT_TRUE(induced_map_surjective(AlgebraHom(cross, line, polys(line, {"x", "0"}), polys(cross, {"x"})), 1));
    EXPECT_TRUE(induced_map_surjective(AlgebraHom(t, dual, polys(dual, {"e"}), polys(t, {"t"})), 1));
    EXPECT_TRUE(induced_map_surjective(AlgebraHom::quotient_map(plane, cross), 1));
    // Not surjective: du is not a combination of 2u du and dv.
    const auto uv = fixture::ring("U", {"u", "v"});
    EXPECT_FALSE(induced_map_surjective(AlgebraHom(plane, uv, polys(uv, {"u^2", "v"})), 2));
}
