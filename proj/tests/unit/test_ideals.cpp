#include "coembed/errors.hpp"
#include "coembed/expression.hpp"
#include "coembed/ideal.hpp"

#include "builders.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace coembed;

namespace {

AlgebraPtr ring(std::vector<std::string> gens) { return fixture::ring("R", std::move(gens)); }

using fixture::polys;
using fixture::usb2;

// Rank of a family of rational polynomials by dense elimination over their
// monomials.
std::size_t span_rank(const std::vector<Polynomial>& family)
{
    std::map<Monomial, std::size_t, MonomialGreater> index;
    for (const auto& p : family) {
        for (const auto& [m, c] : p.terms()) {
            index.emplace(m, 0);
        }
    }
    std::size_t k = 0;
    for (auto& [m, i] : index) {
        i = k++;
    }
    std::vector<std::vector<oracle::Q>> rows;
    for (const auto& p : family) {
        std::vector<oracle::Q> row(index.size());
        for (const auto& [m, c] : p.terms()) {
            row[index[m]] = c.real();
        }
        rows.push_back(row);
    }
    return oracle::rank(rows);
}

bool in_span(const std::vector<Polynomial>& family, const Polynomial& p)
{
    auto extended = family;
    extended.push_back(p);
    return span_rank(extended) == span_rank(family);
}

} // namespace

TEST(Groebner, Examples)
{
    const auto r = ring({"x", "y"});
    EXPECT_EQ(groebner_basis(polys(r, {"x*y"})), polys(r, {"x*y"}));
    EXPECT_EQ(groebner_basis(polys(r, {"x^2 - y", "x^3"})), polys(r, {"x^2 - y", "x*y", "y^2"}));
    EXPECT_EQ(groebner_basis(polys(r, {"x", "y"})), polys(r, {"x", "y"}));
}

TEST(Groebner, RejectsNoncommutative)
{
    const auto f = Algebra::free("F", {"x"});
    EXPECT_THROW(groebner_basis({Polynomial::generator(f, 0)}), UnsupportedKind);
}

TEST(Groebner, IndependentOfGeneratorOrder)
{
    const auto r = ring({"x", "y", "z"});
    std::vector<std::string> gens{"x^2 - y*z", "x*y - z^2", "y^3 - x*z + 1", "x*z^2 - y"};
    std::sort(gens.begin(), gens.end());
    const auto reference = groebner_basis(polys(r, gens));
    int perms = 0;
    do {
        EXPECT_EQ(groebner_basis(polys(r, gens)), reference);
        ++perms;
    } while (std::next_permutation(gens.begin(), gens.end()));
    EXPECT_EQ(perms, 24);
    for (const auto& g : reference) {
        EXPECT_TRUE(g.leading_coefficient().is_one());
    }
}

TEST(Membership, Examples)
{
    const auto r = ring({"x", "y"});
    EXPECT_TRUE(ideal_member(Ideal(r, polys(r, {"x*y"})), parse_polynomial("x^2*y", r)));
    EXPECT_FALSE(ideal_member(Ideal(r, polys(r, {"x*y"})), parse_polynomial("x^2", r)));
    EXPECT_TRUE(ideal_member(Ideal(r, polys(r, {"x^2 - y", "x^3"})), parse_polynomial("y^2", r)));
    const auto u = usb2();
    EXPECT_TRUE(ideal_member(Ideal(u, polys(u, {"E"})), parse_polynomial("H^2*E", u)));
    EXPECT_FALSE(ideal_member(Ideal(u, polys(u, {"E"})), parse_polynomial("H^2", u)));
}

TEST(TruncatedBasis, Examples)
{
    const auto r = ring({"x", "y"});
    const auto b1 = truncated_ideal_basis(Ideal(r, polys(r, {"y"})), 2);
    EXPECT_EQ(b1.size(), 3u);
    EXPECT_EQ(span_rank(b1), span_rank(polys(r, {"y", "x*y", "y^2"})));
    for (const auto& p : polys(r, {"y", "x*y", "y^2"})) {
        EXPECT_TRUE(in_span(b1, p));
    }
    const auto b2 = truncated_ideal_basis(Ideal(r, polys(r, {"x*y"})), 3);
    EXPECT_EQ(b2.size(), 3u);
    for (const auto& p : polys(r, {"x*y", "x^2*y", "x*y^2"})) {
        EXPECT_TRUE(in_span(b2, p));
    }
    const auto u = usb2();
    const auto b3 = truncated_ideal_basis(Ideal(u, polys(u, {"E"})), 2);
    EXPECT_EQ(b3.size(), 3u);
    for (const auto& p : polys(u, {"E", "H*E", "E^2"})) {
        EXPECT_TRUE(in_span(b3, p));
    }
}

TEST(Membership, ClosedUnderTwoSidedProducts)
{
    std::mt19937_64 rng(31);
    const auto r = ring({"x", "y"});
    const auto u = usb2();
    const auto f = Algebra::free("F", {"x", "y"});
    struct Case {
        AlgebraPtr a;
        std::vector<Polynomial> gens;
    };
    const std::vector<Case> cases{{r, polys(r, {"x^2 - y", "x^3"})},
                                  {r, polys(r, {"x*y"})},
                                  {u, polys(u, {"E"})},
                                  {f, polys(f, {"x*y - y*x"})}};
    int n = 0;
    for (int round = 0; round < 60; ++round) {
        for (const auto& c : cases) {
            const Ideal j(c.a, c.gens);
            const Polynomial left = oracle::random_polynomial(c.a, rng, 2, 3);
            const Polynomial right = oracle::random_polynomial(c.a, rng, 2, 3);
            const Polynomial& g = c.gens[static_cast<std::size_t>(round) % c.gens.size()];
            EXPECT_TRUE(ideal_member(j, left * g * right));
            ++n;
        }
    }
    EXPECT_GE(n, 200);
}

TEST(Membership, GroebnerAgreesWithDenseSpanOracle)
{
    // Homogeneous generators: membership of a degree <= 3 element is decided
    // by the span of monomial multiples of degree <= 3.
    std::mt19937_64 rng(32);
    const auto r = ring({"x", "y", "z"});
    const auto gens = polys(r, {"x*y", "y^2 - x*z"});
    const Ideal j(r, gens);
    std::vector<Polynomial> multiples;
    for (const auto& g : gens) {
        for (const auto& m : r->monomials_up_to(1)) {
            multiples.push_back(Polynomial::monomial(r, m) * g);
        }
    }
    int members = 0;
    for (int n = 0; n < 200; ++n) {
        Polynomial p = oracle::random_polynomial(r, rng, 3, 3);
        if (n % 2 == 0) {
            // Bias half the samples towards members.
            p = Polynomial(r);
            for (const auto& m : multiples) {
                p += m * oracle::random_scalar(rng, false);
            }
        }
        const bool oracle_says = in_span(multiples, p);
        EXPECT_EQ(ideal_member(j, p), oracle_says);
        members += oracle_says ? 1 : 0;
    }
    EXPECT_GE(members, 100);
}

TEST(TruncatedBasis, ContainsProductsAndOnlyMembers)
{
    std::mt19937_64 rng(33);
    const auto r = ring({"x", "y"});
    const auto u = usb2();
    const std::vector<std::pair<AlgebraPtr, std::vector<Polynomial>>> cases{
        {r, polys(r, {"x^2 - y", "x^3"})}, {u, polys(u, {"E"})}};
    int n = 0;
    for (const auto& [a, gens] : cases) {
        const Ideal j(a, gens);
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto basis = truncated_ideal_basis(j, d);
            for (const auto& b : basis) {
                EXPECT_TRUE(ideal_member(j, b));
                EXPECT_LE(b.degree(), static_cast<long>(d));
            }
            for (int k = 0; k < 25; ++k) {
                const auto monos = a->monomials_up_to(d);
                const Monomial& m1 = monos[static_cast<std::size_t>(k) % monos.size()];
                const Monomial& m2 = monos[(static_cast<std::size_t>(k) * 7 + 3) % monos.size()];
                const Polynomial p = Polynomial::monomial(a, m1) * gens[static_cast<std::size_t>(k) % gens.size()] *
                                     Polynomial::monomial(a, m2);
                if (p.degree() <= static_cast<long>(d)) {
                    EXPECT_TRUE(in_span(basis, reduce_relations(p)));
                }
                ++n;
            }
        }
    }
    EXPECT_GE(n, 200);
}

TEST(StandardMonomials, QuotientOfDoublePoint)
{
    const auto a = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto monos = relation_ideal(a)->standard_monomials(2);
    // 1, x, y, x^2, y^2
    EXPECT_EQ(monos.size(), 5u);
    EXPECT_TRUE(reduce_relations(parse_polynomial("x^2*y + x", a)) == parse_polynomial("x", a));
}
