#include "coembed/errors.hpp"
#include "coembed/scalar.hpp"
#include "coembed/series.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using coembed::HbarSeries;
using coembed::Rational;
using coembed::Scalar;
using coembed::SeriesOp;

namespace {

using Series = HbarSeries<Scalar>;

Series series(std::initializer_list<Scalar> coeffs)
{
    Series s(coeffs.size() - 1, Scalar(0));
    std::size_t k = 0;
    for (const auto& c : coeffs) {
        s[k++] = c;
    }
    return s;
}

Series random_series(std::mt19937_64& rng, std::size_t r)
{
    Series s(r, Scalar(0));
    for (std::size_t k = 0; k <= r; ++k) {
        s[k] = oracle::random_scalar(rng, true);
    }
    return s;
}

} // namespace

TEST(Scalar, ImaginaryUnitSquaresToMinusOne) { EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1)); }

TEST(Scalar, CanonicalFractions)
{
    EXPECT_EQ(Scalar::fraction(2, 4), Scalar::fraction(1, 2));
    EXPECT_EQ(Scalar::fraction(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3, 4)).to_string(), "1/2-3/4*i");
    EXPECT_EQ(Scalar(Rational(0), Rational(1)).to_string(), "i");
    EXPECT_EQ(Scalar(Rational(2), Rational(1)).to_string(), "2+i");
}

TEST(Scalar, InverseOfZeroThrows) { EXPECT_THROW(Scalar(0).inverse(), std::domain_error); }

TEST(Scalar, FieldAxiomsOnRandomTriples)
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 300; ++n) {
        const Scalar a = oracle::random_scalar(rng, true);
        const Scalar b = oracle::random_scalar(rng, true);
        const Scalar c = oracle::random_scalar(rng, true);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Scalar(1));
        }
        EXPECT_EQ(a - a, Scalar(0));
    }
}

TEST(Scalar, EmbeddingIsRingHomomorphism)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int n = 0; n < 200; ++n) {
        Rational p(num(rng), den(rng));
        Rational q(num(rng), den(rng));
        p.canonicalize();
        q.canonicalize();
        EXPECT_EQ(coembed::embed(p + q), coembed::embed(p) + coembed::embed(q));
        EXPECT_EQ(coembed::embed(p * q), coembed::embed(p) * coembed::embed(q));
    }
}

TEST(Scalar, NoOverflowOnLargeCoefficients)
{
    Scalar a = Scalar::fraction(3, 7);
    for (int k = 0; k < 200; ++k) {
        a *= Scalar::fraction(1000003, 999983);
    }
    for (int k = 0; k < 200; ++k) {
        a /= Scalar::fraction(1000003, 999983);
    }
    EXPECT_EQ(a, Scalar::fraction(3, 7));
}

TEST(Series, TruncatedProducts)
{
    const auto r1 = coembed::series_combine(series({1, 1}), series({1, -1}), SeriesOp::mul);
    EXPECT_EQ(r1, series({1, 0}));
    const auto r2 = coembed::series_combine(series({1, 1, 0}), series({1, -1, 0}), SeriesOp::mul);
    EXPECT_EQ(r2, series({1, 0, -1}));
}

TEST(Series, MismatchedOrdersThrow)
{
    EXPECT_THROW(coembed::series_combine(series({1, 1}), series({1, 1, 1}), SeriesOp::add), coembed::ShapeMismatch);
}

TEST(Series, ProductIsAssociativeAndCommutative)
{
    std::mt19937_64 rng(13);
    for (int n = 0; n < 200; ++n) {
        const std::size_t r = static_cast<std::size_t>(n % 4);
        const Series a = random_series(rng, r);
        const Series b = random_series(rng, r);
        const Series c = random_series(rng, r);
        const auto ab = coembed::series_combine(a, b, SeriesOp::mul);
        EXPECT_EQ(ab, coembed::series_combine(b, a, SeriesOp::mul));
        EXPECT_EQ(coembed::series_combine(ab, c, SeriesOp::mul),
                  coembed::series_combine(a, coembed::series_combine(b, c, SeriesOp::mul), SeriesOp::mul));
    }
}
