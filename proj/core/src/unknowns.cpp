#include "coembed/unknowns.hpp"

#include <map>
#include <utility>

namespace coembed {

PolynomialUnknowns::PolynomialUnknowns(AlgebraPtr algebra, std::size_t slots, std::vector<Monomial> monomials)
    : algebra_(std::move(algebra)), slots_(slots), monomials_(std::move(monomials)),
      solver_(slots_ * monomials_.size())
{
    for (std::size_t s = 0; s < slots_; ++s) {
        for (const auto& m : monomials_) {
            Tuple t(slots_, Polynomial(algebra_));
            t[s] = Polynomial::monomial(algebra_, m);
            units_.push_back(std::move(t));
        }
    }
}

void PolynomialUnknowns::require(const LinearMap& map, const Polynomial& rhs)
{
    std::map<Monomial, std::pair<linalg::SparseRow, Scalar>, MonomialGreater> rows;
    for (std::size_t col = 0; col < units_.size(); ++col) {
        const Polynomial value = map(units_[col]);
        for (const auto& [m, c] : value.terms()) {
            rows[m].first[col] += c;
        }
    }
    for (const auto& [m, c] : rhs.terms()) {
        rows[m].second += c;
    }
    for (auto& [m, row] : rows) {
        ++equations_;
        solver_.add(std::move(row.first), row.second);
    }
}

void PolynomialUnknowns::require_zero(const LinearMap& map) { require(map, Polynomial(algebra_)); }

PolynomialUnknowns::Tuple PolynomialUnknowns::assemble(const linalg::Vector& v) const
{
    Tuple out;
    for (std::size_t s = 0; s < slots_; ++s) {
        Terms t;
        for (std::size_t k = 0; k < monomials_.size(); ++k) {
            add_term(t, monomials_[k], v[s * monomials_.size() + k]);
        }
        out.emplace_back(algebra_, t);
    }
    return out;
}

} // namespace coembed
