#include "coembed/diffop.hpp"

#include "coembed/errors.hpp"

#include <functional>
#include <numeric>

namespace coembed {

namespace {

void require_commutative(const AlgebraPtr& a)
{
    if (a->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind("differential operators need a commutative algebra, '" + a->name() + "' is " +
                              to_string(a->kind()));
    }
}

long binomial(unsigned n, unsigned k)
{
    long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
    }
    return r;
}

// All gamma <= alpha componentwise.
void for_each_below(const MultiIndex& alpha, const std::function<void(const MultiIndex&)>& fn)
{
    MultiIndex gamma(alpha.size(), 0);
    while (true) {
        fn(gamma);
        std::size_t k = 0;
        while (k < alpha.size() && gamma[k] == alpha[k]) {
            gamma[k] = 0;
            ++k;
        }
        if (k == alpha.size()) {
            return;
        }
        ++gamma[k];
    }
}

} // namespace

unsigned order_of(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0U); }

Polynomial apply_partials(const Polynomial& p, const MultiIndex& alpha)
{
    Polynomial out = p;
    for (std::size_t g = 0; g < alpha.size(); ++g) {
        for (unsigned k = 0; k < alpha[g] && !out.is_zero(); ++k) {
            out = partial_derivative(out, g);
        }
    }
    return out;
}

DiffOperator::DiffOperator(AlgebraPtr algebra) : algebra_(std::move(algebra)) { require_commutative(algebra_); }

DiffOperator DiffOperator::identity(AlgebraPtr algebra)
{
    DiffOperator op(algebra);
    op.add_term(Polynomial::constant(algebra, Scalar(1)), MultiIndex(algebra->generator_count(), 0));
    return op;
}

DiffOperator DiffOperator::partial(AlgebraPtr algebra, std::size_t gen)
{
    DiffOperator op(algebra);
    MultiIndex alpha(algebra->generator_count(), 0);
    alpha.at(gen) = 1;
    op.add_term(Polynomial::constant(algebra, Scalar(1)), alpha);
    return op;
}

DiffOperator DiffOperator::vector_field(AlgebraPtr algebra, const std::vector<Polynomial>& coeffs)
{
    if (coeffs.size() != algebra->generator_count()) {
        throw ShapeMismatch("vector field needs one coefficient per generator");
    }
    DiffOperator op(algebra);
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
        MultiIndex alpha(algebra->generator_count(), 0);
        alpha[g] = 1;
        op.add_term(coeffs[g], alpha);
    }
    return op;
}

unsigned DiffOperator::order() const
{
    unsigned m = 0;
    for (const auto& [alpha, c] : terms_) {
        m = std::max(m, order_of(alpha));
    }
    return m;
}

void DiffOperator::add_term(const Polynomial& coeff, const MultiIndex& alpha)
{
    if (alpha.size() != algebra_->generator_count()) {
        throw ShapeMismatch("multi-index length differs from generator count");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial DiffOperator::apply(const Polynomial& p) const
{
    Polynomial out(algebra_);
    for (const auto& [alpha, c] : terms_) {
        Polynomial d = apply_partials(p, alpha);
        if (!d.is_zero()) {
            out += c * d;
        }
    }
    return out;
}

DiffOperator DiffOperator::compose(const DiffOperator& other) const
{
    // (c d^alpha) o (e d^beta) = sum_{gamma <= alpha} binom(alpha, gamma) c (d^gamma e) d^{alpha - gamma + beta}.
    DiffOperator out(algebra_);
    for (const auto& [alpha, c] : terms_) {
        for (const auto& [beta, e] : other.terms_) {
            for_each_below(alpha, [&](const MultiIndex& gamma) {
                Polynomial de = apply_partials(e, gamma);
                if (de.is_zero()) {
                    return;
                }
                long weight = 1;
                MultiIndex total(alpha.size());
                for (std::size_t g = 0; g < alpha.size(); ++g) {
                    weight *= binomial(alpha[g], gamma[g]);
                    total[g] = alpha[g] - gamma[g] + beta[g];
                }
                out.add_term(c * de * Scalar(weight), total);
            });
        }
    }
    return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o)
{
    for (const auto& [alpha, c] : o.terms_) {
        add_term(c, alpha);
    }
    return *this;
}

DiffOperator& DiffOperator::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, p] : terms_) {
        p *= c;
    }
    return *this;
}

} // namespace coembed
