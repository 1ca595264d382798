#pragma once

#include "coembed/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace coembed {

// A word in the generators x_0, x_1, ...
//
// Free algebras use arbitrary words. Commutative and PBW algebras keep their
// normal monomials as nondecreasing words, which is the same data as an
// exponent vector: x0^2*x2 is the word (0, 0, 2).
class Monomial {
public:
    using Letter = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Monomial(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Monomial generator(Letter g) { return Monomial({g}); }
    static Monomial from_exponents(std::span<const unsigned> exponents);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t degree() const noexcept { return letters_.size(); }
    bool is_one() const noexcept { return letters_.empty(); }
    bool is_sorted() const noexcept;

    // Occurrences of each generator, for n generators.
    std::vector<unsigned> exponents(std::size_t n) const;
    unsigned exponent(Letter g) const noexcept;

    // Concatenation.
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Letter> letters_;
};

// Degree-reverse-lexicographic comparison with x_0 > x_1 > ... > x_{n-1}.
// Total degree decides first, then the commutative contents are compared in
// reverse lexicographic order; words with equal content (free algebras) are
// ordered lexicographically as a tie break. Returns <0, 0, >0.
int compare_degrevlex(const Monomial& a, const Monomial& b);

// Map comparator that puts the degrevlex-largest monomial first.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_degrevlex(a, b) > 0; }
};

// A linear combination of words; the raw payload of Polynomial.
using Terms = std::map<Monomial, Scalar, MonomialGreater>;

// terms[m] += c, erasing the entry when it cancels.
void add_term(Terms& terms, const Monomial& m, const Scalar& c);

} // namespace coembed
