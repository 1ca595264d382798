#include "coembed/polynomial.hpp"

#include "coembed/errors.hpp"

namespace coembed {

Polynomial::Polynomial(AlgebraPtr algebra, const Terms& terms)
    : algebra_(std::move(algebra)), terms_(algebra_->normal_form(terms))
{
}

Polynomial Polynomial::constant(AlgebraPtr algebra, const Scalar& c)
{
    Polynomial p(std::move(algebra));
    add_term(p.terms_, Monomial(), c);
    return p;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::size_t index)
{
    if (index >= algebra->generator_count()) {
        throw ShapeMismatch("generator index out of range");
    }
    return monomial(std::move(algebra), Monomial::generator(static_cast<Monomial::Letter>(index)));
}

Polynomial Polynomial::monomial(AlgebraPtr algebra, const Monomial& m, const Scalar& c)
{
    Terms t;
    add_term(t, m, c);
    return Polynomial(std::move(algebra), t);
}

long Polynomial::degree() const noexcept
{
    // The map is ordered degree-first, largest first.
    return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree());
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::require_same_algebra(const Polynomial& o, const char* op) const
{
    if (!same_algebra(algebra_, o.algebra_)) {
        throw ShapeMismatch(std::string("polynomial ") + op + " across algebras '" + algebra_->name() + "' and '" +
                            o.algebra_->name() + "'");
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_algebra(o, "+");
    for (const auto& [m, c] : o.terms_) {
        add_term(terms_, m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_algebra(o, "-");
    for (const auto& [m, c] : o.terms_) {
        add_term(terms_, m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, v] : out.terms_) {
        v = -v;
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.require_same_algebra(b, "*");
    Polynomial out(a.algebra_);
    out.terms_ = a.algebra_->multiply(a.terms_, b.terms_);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial out = constant(algebra_, Scalar(1));
    for (unsigned k = 0; k < e; ++k) {
        out = out * *this;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return same_algebra(a.algebra_, b.algebra_) && a.terms_ == b.terms_;
}

Polynomial commutator(const Polynomial& a, const Polynomial& b) { return a * b - b * a; }

Polynomial product(const AlgebraPtr& algebra, const std::vector<Polynomial>& factors)
{
    Polynomial out = Polynomial::constant(algebra, Scalar(1));
    for (const auto& f : factors) {
        out = out * f;
    }
    return out;
}

Polynomial substitute(const Terms& terms, const std::vector<Polynomial>& images, const AlgebraPtr& target)
{
    Polynomial out(target);
    for (const auto& [m, c] : terms) {
        Polynomial term = Polynomial::constant(target, c);
        for (auto l : m.letters()) {
            if (l >= images.size()) {
                throw ShapeMismatch("substitution lacks an image for generator index " + std::to_string(l));
            }
            term = term * images[l];
        }
        out += term;
    }
    return out;
}

Polynomial rebase(const Polynomial& p, const AlgebraPtr& target)
{
    if (p.algebra()->generator_count() > target->generator_count()) {
        throw ShapeMismatch("rebase onto an algebra with fewer generators");
    }
    return Polynomial(target, p.terms());
}

Polynomial partial_derivative(const Polynomial& p, std::size_t gen)
{
    if (p.algebra()->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind("partial derivatives need a commutative algebra, '" + p.algebra()->name() + "' is " +
                              to_string(p.algebra()->kind()));
    }
    Terms out;
    for (const auto& [m, c] : p.terms()) {
        const auto& letters = m.letters();
        const unsigned e = m.exponent(static_cast<Monomial::Letter>(gen));
        if (e == 0) {
            continue;
        }
        std::vector<Monomial::Letter> rest;
        rest.reserve(letters.size() - 1);
        bool dropped = false;
        for (auto l : letters) {
            if (!dropped && l == gen) {
                dropped = true;
                continue;
            }
            rest.push_back(l);
        }
        add_term(out, Monomial(std::move(rest)), c * Scalar(static_cast<long>(e)));
    }
    return Polynomial(p.algebra(), out);
}

} // namespace coembed
