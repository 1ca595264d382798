#include "coembed/starprod.hpp"

#include "coembed/errors.hpp"
#include "coembed/unknowns.hpp"

#include <algorithm>

namespace coembed {

namespace {

void require_gaussian_ring(const AlgebraPtr& ring)
{
    if (ring->kind() != AlgebraKind::commutative || !ring->relations().empty()) {
        throw UnsupportedKind("star products live on polynomial rings without relations, '" + ring->name() +
                              "' is not one");
    }
    if (ring->field() != ScalarField::gaussian) {
        throw InvalidInput("star products need Q(i) scalars, '" + ring->name() + "' is over Q");
    }
}

// d^alpha x^e = weight * x^(e - alpha), or nothing when some alpha_i > e_i.
bool differentiate(const std::vector<unsigned>& e, const MultiIndex& alpha, std::vector<unsigned>& out, long& weight)
{
    out = e;
    weight = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (alpha[i] > e[i]) {
            return false;
        }
        for (unsigned k = 0; k < alpha[i]; ++k) {
            weight *= static_cast<long>(e[i] - k);
        }
        out[i] = e[i] - alpha[i];
    }
    return true;
}

long binomial(unsigned n, unsigned k)
{
    long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
    }
    return r;
}

long factorial(unsigned n)
{
    long r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Scalar i_power(unsigned k)
{
    switch (k % 4) {
    case 0:
        return Scalar(1);
    case 1:
        return Scalar::i();
    case 2:
        return Scalar(-1);
    default:
        return -Scalar::i();
    }
}

DiffOperator power(const DiffOperator& op, unsigned k)
{
    DiffOperator out = DiffOperator::identity(op.algebra());
    for (unsigned j = 0; j < k; ++j) {
        out = out.compose(op);
    }
    return out;
}

PolySeries series_of(const Polynomial& p, std::size_t r)
{
    return PolySeries::constant(r, p, Polynomial(p.algebra()));
}

// Highest order of a nested pair C_a(C_b(.,.), .) in one slot, a + b <= r.
unsigned nested_order(const StarProduct& s)
{
    unsigned best = 0;
    for (std::size_t a = 0; a <= s.order(); ++a) {
        for (std::size_t b = 0; a + b <= s.order(); ++b) {
            best = std::max(best, s.op(a).order() + s.op(b).order());
        }
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// BidiffOperator

BidiffOperator::BidiffOperator(AlgebraPtr ring) : ring_(std::move(ring))
{
    if (ring_->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind("bidifferential operators need a commutative algebra");
    }
}

BidiffOperator BidiffOperator::pointwise(const AlgebraPtr& ring)
{
    BidiffOperator op(ring);
    const MultiIndex zero(ring->generator_count(), 0);
    op.add_term(Polynomial::constant(ring, Scalar(1)), zero, zero);
    return op;
}

unsigned BidiffOperator::order() const
{
    unsigned m = 0;
    for (const auto& [key, c] : terms_) {
        m = std::max({m, order_of(key.first), order_of(key.second)});
    }
    return m;
}

void BidiffOperator::add_term(const Polynomial& coeff, const MultiIndex& alpha, const MultiIndex& beta)
{
    const std::size_t n = ring_->generator_count();
    if (alpha.size() != n || beta.size() != n) {
        throw ShapeMismatch("bidifferential term multi-index length differs from generator count");
    }
    if (!same_algebra(coeff.algebra(), ring_)) {
        throw ShapeMismatch("bidifferential coefficient lives in '" + coeff.algebra()->name() + "'");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{alpha, beta}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial BidiffOperator::apply(const Polynomial& f, const Polynomial& g) const
{
    const std::size_t n = ring_->generator_count();
    Terms out;
    if (f.is_zero() || g.is_zero()) {
        return Polynomial(ring_);
    }
    std::vector<std::pair<std::vector<unsigned>, Scalar>> fe;
    for (const auto& [m, c] : f.terms()) {
        fe.emplace_back(m.exponents(n), c);
    }
    std::vector<std::pair<std::vector<unsigned>, Scalar>> ge;
    for (const auto& [m, c] : g.terms()) {
        ge.emplace_back(m.exponents(n), c);
    }
    std::vector<std::pair<std::vector<unsigned>, Scalar>> coeffs;
    std::vector<unsigned> df;
    std::vector<unsigned> dg;
    std::vector<unsigned> total(n);
    for (const auto& [key, coeff] : terms_) {
        coeffs.clear();
        for (const auto& [m, c] : coeff.terms()) {
            coeffs.emplace_back(m.exponents(n), c);
        }
        for (const auto& [e1, c1] : fe) {
            long w1 = 0;
            if (!differentiate(e1, key.first, df, w1)) {
                continue;
            }
            for (const auto& [e2, c2] : ge) {
                long w2 = 0;
                if (!differentiate(e2, key.second, dg, w2)) {
                    continue;
                }
                const Scalar base = c1 * c2 * Scalar(w1 * w2);
                for (const auto& [e3, c3] : coeffs) {
                    for (std::size_t i = 0; i < n; ++i) {
                        total[i] = df[i] + dg[i] + e3[i];
                    }
                    coembed::add_term(out, Monomial::from_exponents(total), base * c3);
                }
            }
        }
    }
    return Polynomial(ring_, out);
}

// ---------------------------------------------------------------------------
// StarProduct

StarProduct::StarProduct(AlgebraPtr ring, std::vector<BidiffOperator> ops) : ring_(std::move(ring)), ops_(std::move(ops))
{
    require_gaussian_ring(ring_);
    if (ops_.empty()) {
        throw InvalidInput("a star product needs at least C_0");
    }
    for (const auto& op : ops_) {
        if (!same_algebra(op.ring(), ring_)) {
            throw ShapeMismatch("star product operator acts on '" + op.ring()->name() + "'");
        }
    }
}

unsigned StarProduct::max_operator_order() const
{
    unsigned m = 0;
    for (const auto& op : ops_) {
        m = std::max(m, op.order());
    }
    return m;
}

Polynomial StarProduct::component(std::size_t k, const Polynomial& f, const Polynomial& g) const
{
    return ops_.at(k).apply(f, g);
}

StarProduct StarProduct::with_operator(std::size_t k, BidiffOperator op) const
{
    std::vector<BidiffOperator> ops = ops_;
    ops.at(k) = std::move(op);
    return StarProduct(ring_, std::move(ops));
}

StarProduct exp_star(const VectorField& x, const VectorField& y, std::size_t r)
{
    const auto& ring = x.algebra();
    require_gaussian_ring(ring);
    if (!same_algebra(y.algebra(), ring)) {
        throw ShapeMismatch("exp_star needs vector fields on one algebra");
    }
    for (std::size_t g = 0; g < ring->generator_count(); ++g) {
        if (!(x.apply(y.image(g)) - y.apply(x.image(g))).is_zero()) {
            throw InvalidInput("exp_star needs commuting vector fields; [X, Y] is nonzero on '" +
                               ring->generators()[g] + "'");
        }
    }
    const DiffOperator xop = DiffOperator::vector_field(ring, x.images());
    const DiffOperator yop = DiffOperator::vector_field(ring, y.images());

    std::vector<BidiffOperator> ops;
    ops.push_back(BidiffOperator::pointwise(ring));
    for (unsigned k = 1; k <= r; ++k) {
        BidiffOperator ck(ring);
        // (X(x)Y - Y(x)X)^k = sum_j binom(k,j) (-1)^(k-j) X^j Y^(k-j) (x) Y^j X^(k-j),
        // the two tensor factors commuting because [X, Y] = 0.
        for (unsigned j = 0; j <= k; ++j) {
            const DiffOperator left = power(xop, j).compose(power(yop, k - j));
            const DiffOperator right = power(yop, j).compose(power(xop, k - j));
            Scalar weight = i_power(k) * Scalar::fraction(binomial(k, j), factorial(k));
            if ((k - j) % 2 == 1) {
                weight = -weight;
            }
            for (const auto& [alpha, a] : left.terms()) {
                for (const auto& [beta, b] : right.terms()) {
                    ck.add_term(a * b * weight, alpha, beta);
                }
            }
        }
        ops.push_back(std::move(ck));
    }
    return StarProduct(ring, std::move(ops));
}

PolySeries star_multiply(const StarProduct& s, const PolySeries& f, const PolySeries& g)
{
    if (f.order() != g.order()) {
        throw ShapeMismatch("star product of series with different orders");
    }
    if (f.order() > s.order()) {
        throw ShapeMismatch("series order " + std::to_string(f.order()) + " exceeds the star product order " +
                            std::to_string(s.order()));
    }
    const std::size_t r = f.order();
    PolySeries out(r, Polynomial(s.ring()));
    for (std::size_t a = 0; a <= r; ++a) {
        if (f[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; a + b <= r; ++b) {
            if (g[b].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; a + b + k <= r; ++k) {
                out[a + b + k] += s.component(k, f[a], g[b]);
            }
        }
    }
    return out;
}

PolySeries star_multiply(const StarProduct& s, const Polynomial& f, const Polynomial& g)
{
    return star_multiply(s, series_of(f, s.order()), series_of(g, s.order()));
}

std::vector<Monomial> probe_monomials(const AlgebraPtr& ring, unsigned p)
{
    std::vector<Monomial> out;
    for (const auto& m : ring->monomials_up_to(p * ring->generator_count())) {
        const auto e = m.exponents(ring->generator_count());
        if (std::all_of(e.begin(), e.end(), [p](unsigned v) { return v <= p; })) {
            out.push_back(m);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// axioms

StarAxiomReport check_star_axioms(const StarProduct& s, unsigned p)
{
    const unsigned m = s.max_operator_order();
    if (p < m + 1) {
        throw InvalidInput("probe degree " + std::to_string(p) + " is below the operator order " +
                           std::to_string(m) + " plus one");
    }
    const auto& ring = s.ring();
    const std::size_t r = s.order();
    const auto probes = probe_monomials(ring, p);
    std::vector<Polynomial> polys;
    for (const auto& mono : probes) {
        polys.push_back(Polynomial::monomial(ring, mono));
    }
    const Polynomial one = Polynomial::constant(ring, Scalar(1));

    StarAxiomReport report;
    report.probe_degree = p;
    report.exhaustive = p >= nested_order(s);

    for (const auto& f : polys) {
        for (const auto& g : polys) {
            if (s.component(0, f, g) != f * g) {
                report.c0_pointwise = false;
            }
        }
        for (std::size_t k = 1; k <= r; ++k) {
            if (!s.component(k, one, f).is_zero()) {
                report.unit_left = false;
            }
            if (!s.component(k, f, one).is_zero()) {
                report.unit_right = false;
            }
        }
    }

    // f*g for every probe pair, reused by both associations.
    std::vector<std::vector<PolySeries>> pair_products(polys.size());
    for (std::size_t a = 0; a < polys.size(); ++a) {
        for (std::size_t b = 0; b < polys.size(); ++b) {
            pair_products[a].push_back(star_multiply(s, polys[a], polys[b]));
        }
    }
    std::vector<PolySeries> as_series;
    for (const auto& f : polys) {
        as_series.push_back(series_of(f, r));
    }
    for (std::size_t a = 0; a < polys.size(); ++a) {
        for (std::size_t b = 0; b < polys.size(); ++b) {
            for (std::size_t c = 0; c < polys.size(); ++c) {
                const PolySeries left = star_multiply(s, pair_products[a][b], as_series[c]);
                const PolySeries right = star_multiply(s, as_series[a], pair_products[b][c]);
                for (std::size_t k = 0; k <= r; ++k) {
                    if (left[k] != right[k]) {
                        report.associative = false;
                        report.associativity_failures.push_back(
                            AssociativityFailure{probes[a], probes[b], probes[c], k, left[k], right[k]});
                        break;
                    }
                }
            }
        }
    }

    const std::size_t n = ring->generator_count();
    if (r >= 1) {
        for (const auto& f : polys) {
            for (const auto& g : polys) {
                if (!(s.component(1, f, g) + s.component(1, g, f)).is_zero()) {
                    report.c1_antisymmetric = false;
                }
            }
        }
        const Scalar half_over_i = Scalar::fraction(1, 2) * Scalar::i().inverse();
        std::map<std::pair<std::size_t, std::size_t>, Polynomial> components;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const Polynomial xi = Polynomial::generator(ring, i);
                const Polynomial xj = Polynomial::generator(ring, j);
                components.emplace(std::make_pair(i, j),
                                   (s.component(1, xi, xj) - s.component(1, xj, xi)) * half_over_i);
            }
        }
        report.extracted.emplace(ring, std::move(components));
        const Scalar two_i = Scalar(2) * Scalar::i();
        for (const auto& f : polys) {
            for (const auto& g : polys) {
                const Polynomial lhs = s.component(1, f, g) - s.component(1, g, f);
                if (lhs != report.extracted->bracket(f, g) * two_i) {
                    report.c1_is_bracket = false;
                }
            }
        }
    } else {
        report.extracted.emplace(ring, std::map<std::pair<std::size_t, std::size_t>, Polynomial>{});
    }
    report.extracted_jacobi = jacobi_check(*report.extracted).ok;
    return report;
}

TangentialityReport tangentiality_check(const StarProduct& s, const Ideal& j, std::size_t d)
{
    if (!same_algebra(j.ambient(), s.ring())) {
        throw ShapeMismatch("tangentiality check with an ideal of another algebra");
    }
    TangentialityReport report;
    const auto basis = j.truncated_basis(d);
    const auto probes = probe_monomials(s.ring(), s.max_operator_order() + 1);
    for (std::size_t k = 1; k <= s.order(); ++k) {
        for (const auto& element : basis) {
            for (const auto& probe : probes) {
                ++report.checked;
                Polynomial value = s.component(k, element, Polynomial::monomial(s.ring(), probe));
                if (!j.contains(value)) {
                    report.tangential = false;
                    report.failure = TangentialityReport::Failure{k, element, probe, std::move(value)};
                    return report;
                }
            }
        }
    }
    return report;
}

PolySeries FormalDerivation::apply(const PolySeries& f) const
{
    const auto& ring = f[0].algebra();
    PolySeries out(f.order(), Polynomial(ring));
    for (std::size_t a = 0; a < components.size() && a <= f.order(); ++a) {
        for (std::size_t b = 0; a + b <= f.order(); ++b) {
            if (!f[b].is_zero()) {
                out[a + b] += components[a].apply(f[b]);
            }
        }
    }
    return out;
}

HbarDerivationReport check_hbar_derivation(const StarProduct& s, const FormalDerivation& d, unsigned p)
{
    for (const auto& op : d.components) {
        if (!same_algebra(op.algebra(), s.ring())) {
            throw ShapeMismatch("formal derivation acts on another algebra");
        }
    }
    HbarDerivationReport report;
    report.probe_degree = p;
    const std::size_t r = s.order();
    const auto probes = probe_monomials(s.ring(), p);
    std::vector<PolySeries> series;
    std::vector<PolySeries> derived;
    for (const auto& m : probes) {
        series.push_back(series_of(Polynomial::monomial(s.ring(), m), r));
        derived.push_back(d.apply(series.back()));
    }
    for (std::size_t a = 0; a < probes.size(); ++a) {
        for (std::size_t b = 0; b < probes.size(); ++b) {
            const PolySeries lhs = d.apply(star_multiply(s, series[a], series[b]));
            const PolySeries rhs_left = star_multiply(s, derived[a], series[b]);
            const PolySeries rhs_right = star_multiply(s, series[a], derived[b]);
            for (std::size_t k = 0; k <= r; ++k) {
                if (lhs[k] != rhs_left[k] + rhs_right[k]) {
                    report.ok = false;
                    report.failing_pair = std::make_pair(probes[a], probes[b]);
                    report.failing_order = k;
                    return report;
                }
            }
        }
    }
    return report;
}

Order1Report solve_order1_derivations(const StarProduct& s, std::size_t d)
{
    if (s.order() != 1) {
        throw InvalidInput("solve_order1_derivations needs a star product truncated at order 1");
    }
    const auto& ring = s.ring();
    const std::size_t n = ring->generator_count();
    const auto monomials = ring->monomials_up_to(d);
    PolynomialUnknowns unknowns(ring, 2 * n, monomials);

    auto split = [&](const PolynomialUnknowns::Tuple& t) {
        std::vector<Polynomial> d0(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<Polynomial> d1(t.begin() + static_cast<std::ptrdiff_t>(n), t.end());
        return std::make_pair(VectorField(ring, std::move(d0)), VectorField(ring, std::move(d1)));
    };

    // The h^0 and h^1 Leibniz defects are differential operators of order
    // <= m + 1 in each slot, so these probes decide them.
    const auto probes = probe_monomials(ring, s.max_operator_order() + 1);
    for (const auto& pm : probes) {
        for (const auto& qm : probes) {
            const Polynomial f = Polynomial::monomial(ring, pm);
            const Polynomial g = Polynomial::monomial(ring, qm);
            const Polynomial c1 = s.component(1, f, g);
            unknowns.require_zero([&](const PolynomialUnknowns::Tuple& t) {
                const auto [d0, d1] = split(t);
                return d0.apply(f * g) - d0.apply(f) * g - f * d0.apply(g);
            });
            unknowns.require_zero([&](const PolynomialUnknowns::Tuple& t) {
                const auto [d0, d1] = split(t);
                return d0.apply(c1) + d1.apply(f * g) - s.component(1, d0.apply(f), g) -
                       s.component(1, f, d0.apply(g)) - d1.apply(f) * g - f * d1.apply(g);
            });
        }
    }

    Order1Report report;
    report.degree_bound = d;
    report.unknowns = unknowns.columns();
    const auto solution = unknowns.solve();
    report.rank = solution.rank;
    for (const auto& v : solution.kernel) {
        report.basis.push_back(split(unknowns.assemble(v)));
    }
    const auto axioms = check_star_axioms(s, s.max_operator_order() + 1);
    report.poisson_dimension = solve_poisson_vector_fields(*axioms.extracted, d).dimension();
    report.field_dimension = n * monomials.size();
    return report;
}

} // namespace coembed
