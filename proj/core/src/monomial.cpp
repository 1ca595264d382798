#include "coembed/monomial.hpp"

#include <algorithm>

namespace coembed {

Monomial Monomial::from_exponents(std::span<const unsigned> exponents)
{
    std::vector<Letter> letters;
    for (std::size_t g = 0; g < exponents.size(); ++g) {
        letters.insert(letters.end(), exponents[g], static_cast<Letter>(g));
    }
    return Monomial(std::move(letters));
}

bool Monomial::is_sorted() const noexcept { return std::is_sorted(letters_.begin(), letters_.end()); }

std::vector<unsigned> Monomial::exponents(std::size_t n) const
{
    std::vector<unsigned> e(n, 0);
    for (Letter l : letters_) {
        if (l >= e.size()) {
            e.resize(l + 1, 0);
        }
        ++e[l];
    }
    return e;
}

unsigned Monomial::exponent(Letter g) const noexcept
{
    return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), g));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Letter> letters;
    letters.reserve(a.letters_.size() + b.letters_.size());
    letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Monomial(std::move(letters));
}

namespace {

// Reverse-lex on sorted contents: scanning from the end, the first position
// where the words differ decides, and the word holding the larger generator
// index there carries more of a smaller variable, hence is the smaller one.
int compare_sorted_contents(const std::vector<Monomial::Letter>& a, const std::vector<Monomial::Letter>& b)
{
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) {
            return a[k] > b[k] ? -1 : 1;
        }
    }
    return 0;
}

} // namespace

int compare_degrevlex(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree() ? -1 : 1;
    }
    const auto& la = a.letters();
    const auto& lb = b.letters();
    int content;
    if (a.is_sorted() && b.is_sorted()) {
        content = compare_sorted_contents(la, lb);
        if (content != 0 || la == lb) {
            return content;
        }
    } else {
        auto sa = la;
        auto sb = lb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        content = compare_sorted_contents(sa, sb);
        if (content != 0) {
            return content;
        }
    }
    if (la == lb) {
        return 0;
    }
    return la < lb ? -1 : 1;
}

void add_term(Terms& terms, const Monomial& m, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

} // namespace coembed
