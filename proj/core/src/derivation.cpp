#include "coembed/derivation.hpp"

#include "coembed/errors.hpp"
#include "coembed/linalg.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

namespace coembed {

namespace {

// One occurrence of a generator inside a word of a linear combination:
// coeff * prefix * [x_letter] * suffix.
struct Slot {
    Scalar coeff;
    Polynomial prefix;
    std::size_t letter;
    Polynomial suffix;
};

std::vector<Slot> leibniz_slots(const AlgebraPtr& algebra, const Terms& terms)
{
    std::vector<Slot> slots;
    for (const auto& [m, c] : terms) {
        const auto& w = m.letters();
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::vector<Monomial::Letter> pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<Monomial::Letter> post(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
            slots.push_back(Slot{c, Polynomial::monomial(algebra, Monomial(std::move(pre))), w[k],
                                 Polynomial::monomial(algebra, Monomial(std::move(post)))});
        }
    }
    return slots;
}

Polynomial through_slot(const Slot& s, const Polynomial& value)
{
    return (s.prefix * value * s.suffix) * s.coeff;
}

// Linear system whose unknowns are the coefficients of D(x_i) over a fixed
// list of monomials. Each constraint is "some linear polynomial-valued
// expression has zero remainder"; one equation per remainder monomial.
class DerivationSystem {
public:
    DerivationSystem(AlgebraPtr algebra, std::vector<Monomial> monomials)
        : algebra_(std::move(algebra)), monomials_(std::move(monomials)),
          solver_(algebra_->generator_count() * monomials_.size())
    {
    }

    std::size_t columns() const noexcept { return solver_.columns(); }
    std::size_t column(std::size_t gen, std::size_t mono) const { return gen * monomials_.size() + mono; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const AlgebraPtr& algebra() const noexcept { return algebra_; }

    // sum_col x_col * values[col] = rhs, compared monomial by monomial.
    void add_equations(const std::vector<std::pair<std::size_t, Polynomial>>& values, const Polynomial* rhs)
    {
        std::map<Monomial, std::pair<linalg::SparseRow, Scalar>, MonomialGreater> rows;
        for (const auto& [col, value] : values) {
            for (const auto& [m, c] : value.terms()) {
                rows[m].first[col] += c;
            }
        }
        if (rhs != nullptr) {
            for (const auto& [m, c] : rhs->terms()) {
                rows[m].second += c;
            }
        }
        for (auto& [m, row] : rows) {
            ++equations_;
            solver_.add(std::move(row.first), row.second);
        }
    }

    std::size_t equations() const noexcept { return equations_; }
    const linalg::IncrementalSolver& solver() const noexcept { return solver_; }

    Derivation derivation(const linalg::Vector& v) const
    {
        std::vector<Polynomial> images;
        for (std::size_t g = 0; g < algebra_->generator_count(); ++g) {
            Terms t;
            for (std::size_t k = 0; k < monomials_.size(); ++k) {
                add_term(t, monomials_[k], v[column(g, k)]);
            }
            images.emplace_back(algebra_, t);
        }
        return Derivation(algebra_, std::move(images));
    }

private:
    AlgebraPtr algebra_;
    std::vector<Monomial> monomials_;
    linalg::IncrementalSolver solver_;
    std::size_t equations_ = 0;
};

std::size_t max_degree(const std::vector<Polynomial>& ps)
{
    std::size_t m = 0;
    for (const auto& p : ps) {
        m = std::max(m, static_cast<std::size_t>(std::max(0L, p.degree())));
    }
    return m;
}

// Adds "D(element) has zero remainder in `ideal`" for each element.
void add_leibniz_membership(DerivationSystem& system, const std::vector<Terms>& elements, const Ideal& ideal,
                            std::size_t bound)
{
    const auto& algebra = system.algebra();
    for (const auto& element : elements) {
        const auto slots = leibniz_slots(algebra, element);
        std::vector<std::pair<std::size_t, Polynomial>> values;
        for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
            for (std::size_t k = 0; k < system.monomials().size(); ++k) {
                const Polynomial m = Polynomial::monomial(algebra, system.monomials()[k]);
                Polynomial value(algebra);
                for (const auto& s : slots) {
                    if (s.letter == g) {
                        value += through_slot(s, m);
                    }
                }
                value = ideal.remainder(value, bound);
                if (!value.is_zero()) {
                    values.emplace_back(system.column(g, k), std::move(value));
                }
            }
        }
        system.add_equations(values, nullptr);
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(AlgebraPtr algebra, std::vector<Polynomial> images)
    : algebra_(std::move(algebra)), images_(std::move(images))
{
    if (images_.size() != algebra_->generator_count()) {
        throw ShapeMismatch("derivation of '" + algebra_->name() + "' needs " +
                            std::to_string(algebra_->generator_count()) + " generator images, got " +
                            std::to_string(images_.size()));
    }
    for (const auto& p : images_) {
        if (!same_algebra(p.algebra(), algebra_)) {
            throw ShapeMismatch("derivation image lives in '" + p.algebra()->name() + "', expected '" +
                                algebra_->name() + "'");
        }
    }
}

Derivation Derivation::zero(const AlgebraPtr& algebra)
{
    return Derivation(algebra, std::vector<Polynomial>(algebra->generator_count(), Polynomial(algebra)));
}

Derivation Derivation::inner(const Polynomial& x)
{
    const auto& algebra = x.algebra();
    std::vector<Polynomial> images;
    for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
        images.push_back(commutator(x, Polynomial::generator(algebra, g)));
    }
    return Derivation(algebra, std::move(images));
}

Polynomial Derivation::apply_words(const Terms& terms) const
{
    Polynomial out(algebra_);
    for (const auto& s : leibniz_slots(algebra_, terms)) {
        if (!images_[s.letter].is_zero()) {
            out += through_slot(s, images_[s.letter]);
        }
    }
    return out;
}

Polynomial Derivation::apply(const Polynomial& p) const
{
    if (!same_algebra(p.algebra(), algebra_)) {
        throw ShapeMismatch("derivation of '" + algebra_->name() + "' applied to an element of '" +
                            p.algebra()->name() + "'");
    }
    return apply_words(p.terms());
}

Derivation& Derivation::operator+=(const Derivation& o)
{
    if (!same_algebra(algebra_, o.algebra_)) {
        throw ShapeMismatch("sum of derivations of different algebras");
    }
    for (std::size_t g = 0; g < images_.size(); ++g) {
        images_[g] += o.images_[g];
    }
    return *this;
}

Derivation& Derivation::operator*=(const Scalar& c)
{
    for (auto& p : images_) {
        p *= c;
    }
    return *this;
}

bool equivalent(const Derivation& a, const Derivation& b)
{
    if (!same_algebra(a.algebra(), b.algebra())) {
        return false;
    }
    for (std::size_t g = 0; g < a.images().size(); ++g) {
        if (!reduce_relations(a.image(g) - b.image(g)).is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

// Coordinates of derivations in a shared (generator, monomial) basis.
class DerivationCoordinates {
public:
    linalg::SparseRow row(const Derivation& d)
    {
        linalg::SparseRow out;
        for (std::size_t g = 0; g < d.images().size(); ++g) {
            const Polynomial reduced = reduce_relations(d.image(g));
            for (const auto& [m, c] : reduced.terms()) {
                const auto [it, inserted] = index_.try_emplace({g, m}, index_.size());
                out[it->second] += c;
            }
        }
        return out;
    }

private:
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index_;
};

bool all_in_span(const std::vector<Derivation>& family, const std::vector<Derivation>& candidates)
{
    DerivationCoordinates coords;
    std::vector<linalg::SparseRow> rows;
    for (const auto& d : family) {
        rows.push_back(coords.row(d));
    }
    std::vector<linalg::SparseRow> wanted;
    for (const auto& d : candidates) {
        wanted.push_back(coords.row(d));
    }
    // Columns are only known once every derivation has been indexed.
    linalg::IncrementalSolver solver(std::numeric_limits<std::size_t>::max());
    for (auto& r : rows) {
        solver.add(std::move(r));
    }
    return std::all_of(wanted.begin(), wanted.end(), [&](const linalg::SparseRow& r) { return solver.in_span(r); });
}

} // namespace

bool in_span(const std::vector<Derivation>& family, const Derivation& d) { return all_in_span(family, {d}); }

bool same_span(const std::vector<Derivation>& a, const std::vector<Derivation>& b)
{
    return all_in_span(a, b) && all_in_span(b, a);
}

DerivationCheck check_derivation(const Derivation& d)
{
    DerivationCheck out;
    const auto& relations = d.algebra()->relations();
    for (std::size_t r = 0; r < relations.size(); ++r) {
        Polynomial defect = reduce_relations(d.apply_words(relations[r]));
        if (!defect.is_zero()) {
            out.ok = false;
            out.failing_relations.push_back(r);
            out.defects.push_back(std::move(defect));
        }
    }
    return out;
}

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::basis:
        return "basis";
    case SolveStatus::affine_solution:
        return "affine-solution";
    case SolveStatus::infeasible_within_bound:
        return "infeasible-within-bound";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// solver

SolveReport solve_derivations(const AlgebraPtr& algebra, std::size_t d, const SolveOptions& options)
{
    const auto relations = relation_ideal(algebra);
    DerivationSystem system(algebra, relations->standard_monomials(d));

    SolveReport report;
    report.degree_bound = d;
    report.unknowns = system.columns();

    std::size_t slack = algebra->max_relation_degree();
    if (options.preserve) {
        if (!same_algebra(options.preserve->ambient(), algebra)) {
            throw ShapeMismatch("preserved ideal does not live in '" + algebra->name() + "'");
        }
        slack = std::max(slack, max_degree(options.preserve->generators()));
    }
    report.membership_bound = d + slack;

    // (i) Leibniz on each relation. PBW relations hold identically on normal
    // forms but still constrain D: the Leibniz image must vanish.
    if (!algebra->relations().empty()) {
        add_leibniz_membership(system, algebra->relations(), *relations, report.membership_bound);
        report.constraints.push_back("leibniz on " + std::to_string(algebra->relations().size()) + " relations");
    }

    // (ii) D(g) in J for the generators g of J.
    if (options.preserve) {
        std::vector<Terms> gens;
        for (const auto& g : options.preserve->generators()) {
            gens.push_back(g.terms());
        }
        add_leibniz_membership(system, gens, *options.preserve, report.membership_bound);
        report.constraints.push_back("preserve ideal with " + std::to_string(gens.size()) + " generators");
    }

    // (iii) pi(D(x_i)) = target(pi(x_i)) in B.
    if (options.pushforward) {
        const auto& pi = options.pushforward->hom;
        const auto& target = options.pushforward->target;
        if (!same_algebra(pi.domain(), algebra) || !same_algebra(target.algebra(), pi.codomain())) {
            throw ShapeMismatch("pushforward constraint does not match the algebra being solved");
        }
        std::vector<Polynomial> images_of_monomials;
        for (const auto& m : system.monomials()) {
            images_of_monomials.push_back(pi.apply(Polynomial::monomial(algebra, m)));
        }
        for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
            const Polynomial rhs = target.apply(pi.images()[g]);
            const std::size_t bound = std::max(max_degree(images_of_monomials), max_degree({rhs}));
            std::vector<std::pair<std::size_t, Polynomial>> values;
            for (std::size_t k = 0; k < images_of_monomials.size(); ++k) {
                Polynomial v = reduce_relations(images_of_monomials[k], bound);
                if (!v.is_zero()) {
                    values.emplace_back(system.column(g, k), std::move(v));
                }
            }
            const Polynomial reduced_rhs = reduce_relations(rhs, bound);
            system.add_equations(values, &reduced_rhs);
        }
        report.constraints.push_back("pushforward to the target through " + pi.domain()->name() + " -> " +
                                     pi.codomain()->name());
    }

    report.equations = system.equations();
    const auto solution = system.solver().solve();
    report.rank = solution.rank;
    if (!solution.feasible) {
        report.status = SolveStatus::infeasible_within_bound;
        return report;
    }
    for (const auto& v : solution.kernel) {
        report.basis.push_back(system.derivation(v));
    }
    if (options.pushforward) {
        report.status = SolveStatus::affine_solution;
        report.particular = system.derivation(solution.particular);
    } else {
        report.status = SolveStatus::basis;
    }
    return report;
}

// ---------------------------------------------------------------------------
// pushforward, inner derivations, lifts

Derivation pushforward(const Derivation& d, const AlgebraHom& pi, const std::optional<Ideal>& kernel)
{
    if (!same_algebra(d.algebra(), pi.domain())) {
        throw ShapeMismatch("pushforward of a derivation of '" + d.algebra()->name() + "' along a hom out of '" +
                            pi.domain()->name() + "'");
    }
    std::vector<Polynomial> images;
    for (const auto& w : pi.witnesses()) {
        images.push_back(reduce_relations(pi.apply(d.apply(w))));
    }
    Derivation out(pi.codomain(), std::move(images));

    if (!check_derivation(out).ok) {
        throw NotInDerPi("pushed-forward map is not a derivation of '" + pi.codomain()->name() + "'");
    }
    // pi o D and D~ o pi are pi-derivations A -> B; agreeing on generators
    // makes them equal, which forces D(ker pi) into ker pi.
    for (std::size_t g = 0; g < pi.images().size(); ++g) {
        const Polynomial lhs = pi.apply(d.image(g));
        const Polynomial rhs = out.apply(pi.images()[g]);
        if (!reduce_relations(lhs - rhs).is_zero()) {
            throw NotInDerPi("derivation does not descend along " + pi.domain()->name() + " -> " +
                             pi.codomain()->name() + ": generator '" + pi.domain()->generators()[g] +
                             "' breaks D~ o pi = pi o D");
        }
    }
    if (kernel) {
        for (const auto& k : kernel->generators()) {
            if (!reduce_relations(pi.apply(k)).is_zero()) {
                throw InvalidInput("declared kernel generator does not map to zero");
            }
            if (!reduce_relations(pi.apply(d.apply(k))).is_zero()) {
                throw NotInDerPi("derivation does not map the kernel into itself");
            }
        }
    }
    return out;
}

std::optional<Polynomial> is_inner(const Derivation& d, std::size_t bound)
{
    const auto& algebra = d.algebra();
    const auto monomials = relation_ideal(algebra)->standard_monomials(bound);
    linalg::IncrementalSolver solver(monomials.size());

    for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
        const Polynomial x = Polynomial::generator(algebra, g);
        std::vector<Polynomial> brackets;
        for (const auto& m : monomials) {
            brackets.push_back(commutator(Polynomial::monomial(algebra, m), x));
        }
        const std::size_t deg = std::max(max_degree(brackets), max_degree({d.image(g)}));
        std::map<Monomial, std::pair<linalg::SparseRow, Scalar>, MonomialGreater> rows;
        for (std::size_t k = 0; k < brackets.size(); ++k) {
            const Polynomial reduced = reduce_relations(brackets[k], deg);
            for (const auto& [m, c] : reduced.terms()) {
                rows[m].first[k] += c;
            }
        }
        const Polynomial reduced = reduce_relations(d.image(g), deg);
        for (const auto& [m, c] : reduced.terms()) {
            rows[m].second += c;
        }
        for (auto& [m, row] : rows) {
            solver.add(std::move(row.first), row.second);
        }
    }
    const auto solution = solver.solve();
    if (!solution.feasible) {
        return std::nullopt;
    }
    Terms t;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        add_term(t, monomials[k], solution.particular[k]);
    }
    return Polynomial(algebra, t);
}

Derivation free_lift(const AlgebraHom& pi, const Derivation& target)
{
    if (pi.domain()->kind() != AlgebraKind::free) {
        throw UnsupportedKind("free_lift needs a hom out of a free algebra, '" + pi.domain()->name() + "' is " +
                              to_string(pi.domain()->kind()));
    }
    if (!same_algebra(target.algebra(), pi.codomain())) {
        throw ShapeMismatch("lift target is not a derivation of the codomain");
    }
    std::vector<Polynomial> images;
    for (const auto& y : pi.images()) {
        images.push_back(pi.lift(reduce_relations(target.apply(y))));
    }
    return Derivation(pi.domain(), std::move(images));
}

Derivation tensor_lift(const TensorProduct& product, const Derivation& d)
{
    if (!same_algebra(d.algebra(), product.right.domain())) {
        throw ShapeMismatch("tensor lift needs a derivation of the right factor");
    }
    const auto& t = product.algebra;
    std::vector<Polynomial> images(product.left.domain()->generator_count(), Polynomial(t));
    for (const auto& p : d.images()) {
        images.push_back(product.right.apply(p));
    }
    return Derivation(t, std::move(images));
}

AlgebraHom augmentation_map(const TensorProduct& product, const AlgebraHom& eps)
{
    const auto& a1 = product.left.domain();
    const auto& a2 = product.right.domain();
    if (!same_algebra(eps.domain(), a1) || eps.codomain()->generator_count() != 0) {
        throw ShapeMismatch("augmentation must map the left factor to the scalars");
    }
    std::vector<Polynomial> images;
    for (const auto& e : eps.images()) {
        images.push_back(Polynomial::constant(a2, reduce_relations(e).constant_term()));
    }
    std::vector<Polynomial> witnesses;
    for (std::size_t g = 0; g < a2->generator_count(); ++g) {
        images.push_back(Polynomial::generator(a2, g));
        witnesses.push_back(Polynomial::generator(product.algebra, a1->generator_count() + g));
    }
    return AlgebraHom(product.algebra, a2, std::move(images), std::move(witnesses));
}

// ---------------------------------------------------------------------------
// 2x2 matrices

namespace {

struct Matrix2 {
    std::array<Polynomial, 4> e; // row-major

    static Matrix2 scalar(const AlgebraPtr& a, const Scalar& c)
    {
        return Matrix2{{Polynomial::constant(a, c), Polynomial(a), Polynomial(a), Polynomial::constant(a, c)}};
    }

    friend Matrix2 operator*(const Matrix2& l, const Matrix2& r)
    {
        return Matrix2{{l.e[0] * r.e[0] + l.e[1] * r.e[2], l.e[0] * r.e[1] + l.e[1] * r.e[3],
                        l.e[2] * r.e[0] + l.e[3] * r.e[2], l.e[2] * r.e[1] + l.e[3] * r.e[3]}};
    }

    Matrix2& operator+=(const Matrix2& o)
    {
        for (std::size_t k = 0; k < 4; ++k) {
            e[k] += o.e[k];
        }
        return *this;
    }
};

} // namespace

bool admissibility_check(const AlgebraPtr& algebra, const std::vector<Polynomial>& images)
{
    const Derivation shape(algebra, images); // validates arity and algebra
    std::vector<Matrix2> generators;
    for (std::size_t g = 0; g < algebra->generator_count(); ++g) {
        const Polynomial x = Polynomial::generator(algebra, g);
        generators.push_back(Matrix2{{x, images[g], Polynomial(algebra), x}});
    }
    for (const auto& relation : algebra->relations()) {
        Matrix2 value = Matrix2::scalar(algebra, Scalar(0));
        for (const auto& [m, c] : relation) {
            Matrix2 word = Matrix2::scalar(algebra, c);
            for (auto l : m.letters()) {
                word = word * generators[l];
            }
            value += word;
        }
        for (const auto& entry : value.e) {
            if (!reduce_relations(entry).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace coembed
