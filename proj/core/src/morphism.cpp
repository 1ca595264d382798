#include "coembed/morphism.hpp"

#include "coembed/errors.hpp"
#include "coembed/ideal.hpp"

#include <set>

namespace coembed {

namespace {

void require_in(const Polynomial& p, const AlgebraPtr& algebra, const char* what)
{
    if (!same_algebra(p.algebra(), algebra)) {
        throw ShapeMismatch(std::string(what) + " lives in '" + p.algebra()->name() + "', expected '" +
                            algebra->name() + "'");
    }
}

Terms shift_letters(const Terms& terms, Monomial::Letter offset)
{
    Terms out;
    for (const auto& [m, c] : terms) {
        std::vector<Monomial::Letter> letters = m.letters();
        for (auto& l : letters) {
            l += offset;
        }
        add_term(out, Monomial(std::move(letters)), c);
    }
    return out;
}

Terms swap_relation(Monomial::Letter a, Monomial::Letter b)
{
    // x_b x_a - x_a x_b, b > a.
    Terms t;
    add_term(t, Monomial{b, a}, Scalar(1));
    add_term(t, Monomial{a, b}, Scalar(-1));
    return t;
}

bool relation_free(const AlgebraPtr& a) { return a->relations().empty(); }

} // namespace

AlgebraHom::AlgebraHom(AlgebraPtr domain, AlgebraPtr codomain, std::vector<Polynomial> images,
                       std::optional<std::vector<Polynomial>> witnesses)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)),
      witnesses_(std::move(witnesses))
{
    if (images_.size() != domain_->generator_count()) {
        throw ShapeMismatch("hom " + domain_->name() + " -> " + codomain_->name() + " has " +
                            std::to_string(images_.size()) + " images for " +
                            std::to_string(domain_->generator_count()) + " generators");
    }
    for (const auto& p : images_) {
        require_in(p, codomain_, "generator image");
    }
    if (witnesses_) {
        if (witnesses_->size() != codomain_->generator_count()) {
            throw ShapeMismatch("hom " + domain_->name() + " -> " + codomain_->name() + " has " +
                                std::to_string(witnesses_->size()) + " witnesses for " +
                                std::to_string(codomain_->generator_count()) + " generators");
        }
        for (const auto& w : *witnesses_) {
            require_in(w, domain_, "witness");
        }
    }
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& algebra)
{
    std::vector<Polynomial> gens;
    for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
        gens.push_back(Polynomial::generator(algebra, g));
    }
    return AlgebraHom(algebra, algebra, gens, gens);
}

AlgebraHom AlgebraHom::quotient_map(const AlgebraPtr& cover, const AlgebraPtr& quotient)
{
    if (cover->generators() != quotient->generators()) {
        throw ShapeMismatch("quotient map needs the same generators on both sides");
    }
    std::vector<Polynomial> images;
    std::vector<Polynomial> witnesses;
    for (std::size_t g = 0; g < cover->generator_count(); ++g) {
        images.push_back(Polynomial::generator(quotient, g));
        witnesses.push_back(Polynomial::generator(cover, g));
    }
    return AlgebraHom(cover, quotient, std::move(images), std::move(witnesses));
}

const std::vector<Polynomial>& AlgebraHom::witnesses() const
{
    if (!witnesses_) {
        throw InvalidInput("hom " + domain_->name() + " -> " + codomain_->name() + " carries no preimage witnesses");
    }
    return *witnesses_;
}

Polynomial AlgebraHom::apply(const Polynomial& p) const
{
    require_in(p, domain_, "argument");
    return substitute(p.terms(), images_, codomain_);
}

Polynomial AlgebraHom::lift(const Polynomial& q) const
{
    require_in(q, codomain_, "argument");
    return substitute(q.terms(), witnesses(), domain_);
}

HomCheck check_hom(const AlgebraHom& f)
{
    HomCheck out;
    const auto& relations = f.domain()->relations();
    for (std::size_t r = 0; r < relations.size(); ++r) {
        Polynomial image = reduce_relations(substitute(relations[r], f.images(), f.codomain()));
        if (!image.is_zero()) {
            out.ok = false;
            out.failing_relations.push_back(r);
            out.relation_images.push_back(std::move(image));
        }
    }
    if (f.witnessed()) {
        for (std::size_t y = 0; y < f.codomain()->generator_count(); ++y) {
            const Polynomial back = f.apply(f.witnesses()[y]) - Polynomial::generator(f.codomain(), y);
            if (!reduce_relations(back).is_zero()) {
                out.ok = false;
                out.failing_witnesses.push_back(y);
            }
        }
    }
    return out;
}

AlgebraHom compose(const AlgebraHom& f, const AlgebraHom& g)
{
    if (!same_algebra(f.codomain(), g.domain())) {
        throw ShapeMismatch("cannot compose " + f.domain()->name() + " -> " + f.codomain()->name() + " with " +
                            g.domain()->name() + " -> " + g.codomain()->name());
    }
    std::vector<Polynomial> images;
    for (const auto& p : f.images()) {
        images.push_back(g.apply(rebase(p, g.domain())));
    }
    std::optional<std::vector<Polynomial>> witnesses;
    if (f.witnessed() && g.witnessed()) {
        witnesses.emplace();
        for (const auto& w : g.witnesses()) {
            witnesses->push_back(f.lift(rebase(w, f.codomain())));
        }
    }
    return AlgebraHom(f.domain(), g.codomain(), std::move(images), std::move(witnesses));
}

TensorProduct tensor_product(const AlgebraPtr& a1, const AlgebraPtr& a2, std::string name)
{
    if (a1->field() != a2->field()) {
        throw ShapeMismatch("tensor product of algebras over different scalar fields");
    }
    AlgebraSpec spec;
    spec.name = name.empty() ? a1->name() + "(x)" + a2->name() : std::move(name);
    spec.field = a1->field();
    spec.generators = a1->generators();
    std::set<std::string> names(spec.generators.begin(), spec.generators.end());
    for (const auto& g : a2->generators()) {
        if (!names.insert(g).second) {
            throw InvalidInput("tensor factors share the generator name '" + g + "'");
        }
        spec.generators.push_back(g);
    }
    const auto n1 = static_cast<Monomial::Letter>(a1->generator_count());
    const auto n2 = static_cast<Monomial::Letter>(a2->generator_count());

    auto pbw_like = [](const AlgebraPtr& a) {
        return a->kind() == AlgebraKind::pbw || (a->kind() == AlgebraKind::commutative && relation_free(a)) ||
               (a->kind() == AlgebraKind::free && relation_free(a) && a->generator_count() <= 1);
    };
    // Commutators among a factor's own generators, for factors that get them
    // implicitly from their kind.
    auto own_commutators = [](const AlgebraPtr& a, Monomial::Letter offset, std::vector<Terms>& out) {
        if (a->kind() != AlgebraKind::commutative) {
            return;
        }
        const auto n = static_cast<Monomial::Letter>(a->generator_count());
        for (Monomial::Letter j = 0; j < n; ++j) {
            for (Monomial::Letter i = 0; i < j; ++i) {
                out.push_back(swap_relation(i + offset, j + offset));
            }
        }
    };

    if (a1->kind() == AlgebraKind::commutative && a2->kind() == AlgebraKind::commutative) {
        spec.kind = AlgebraKind::commutative;
        spec.relations = a1->relations();
        for (const auto& r : a2->relations()) {
            spec.relations.push_back(shift_letters(r, n1));
        }
    } else {
        spec.kind = (pbw_like(a1) && pbw_like(a2)) ? AlgebraKind::pbw : AlgebraKind::free;
        own_commutators(a1, 0, spec.relations);
        for (const auto& r : a1->relations()) {
            spec.relations.push_back(r);
        }
        own_commutators(a2, n1, spec.relations);
        for (const auto& r : a2->relations()) {
            spec.relations.push_back(shift_letters(r, n1));
        }
        for (Monomial::Letter b = 0; b < n2; ++b) {
            for (Monomial::Letter a = 0; a < n1; ++a) {
                spec.relations.push_back(swap_relation(a, b + n1));
            }
        }
    }
    AlgebraPtr t = Algebra::create(std::move(spec));

    std::vector<Polynomial> left_images;
    for (Monomial::Letter g = 0; g < n1; ++g) {
        left_images.push_back(Polynomial::generator(t, g));
    }
    std::vector<Polynomial> right_images;
    for (Monomial::Letter g = 0; g < n2; ++g) {
        right_images.push_back(Polynomial::generator(t, g + n1));
    }
    return TensorProduct{t, AlgebraHom(a1, t, std::move(left_images)), AlgebraHom(a2, t, std::move(right_images))};
}

FormalHom::FormalHom(AlgebraHom base, std::vector<DiffOperator> corrections)
    : base_(std::move(base)), corrections_(std::move(corrections))
{
    if (base_.domain()->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind("formal homs need a commutative domain, '" + base_.domain()->name() + "' is " +
                              to_string(base_.domain()->kind()));
    }
    if (!base_.witnessed()) {
        throw InvalidInput("the base of a formal hom must carry preimage witnesses");
    }
    for (const auto& t : corrections_) {
        if (!same_algebra(t.algebra(), base_.domain())) {
            throw ShapeMismatch("formal hom correction acts on '" + t.algebra()->name() + "', expected '" +
                                base_.domain()->name() + "'");
        }
    }
}

Polynomial FormalHom::component(std::size_t k, const Polynomial& f) const
{
    if (k == 0) {
        return base_.apply(f);
    }
    if (k > corrections_.size()) {
        return Polynomial(base_.codomain());
    }
    return base_.apply(corrections_[k - 1].apply(f));
}

PolySeries FormalHom::apply(const PolySeries& f) const
{
    const std::size_t r = f.order();
    PolySeries out(r, Polynomial(base_.codomain()));
    for (std::size_t m = 0; m <= r; ++m) {
        Polynomial acc(base_.codomain());
        for (std::size_t k = 0; k <= m; ++k) {
            if (!f[m - k].is_zero()) {
                acc += component(k, f[m - k]);
            }
        }
        out[m] = reduce_relations(acc);
    }
    return out;
}

PolySeries formal_preimage(const FormalHom& pi, const PolySeries& g)
{
    const std::size_t r = g.order();
    const AlgebraHom& base = pi.base();
    PolySeries f(r, Polynomial(base.domain()));
    for (std::size_t k = 0; k <= r; ++k) {
        Polynomial rhs = rebase(g[k], base.codomain());
        for (std::size_t j = 1; j <= k; ++j) {
            if (!f[k - j].is_zero()) {
                rhs -= pi.component(j, f[k - j]);
            }
        }
        f[k] = base.lift(reduce_relations(rhs));
    }
    return f;
}

} // namespace coembed
