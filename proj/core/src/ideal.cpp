#include "coembed/ideal.hpp"

#include "coembed/errors.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <utility>

namespace coembed {

// ---------------------------------------------------------------------------
// monomial arithmetic on sorted words

bool divides(const Monomial& a, const Monomial& b)
{
    // Both sorted: multiset inclusion.
    return std::includes(b.letters().begin(), b.letters().end(), a.letters().begin(), a.letters().end());
}

Monomial quotient(const Monomial& b, const Monomial& a)
{
    std::vector<Monomial::Letter> out;
    std::set_difference(b.letters().begin(), b.letters().end(), a.letters().begin(), a.letters().end(),
                        std::back_inserter(out));
    return Monomial(std::move(out));
}

namespace {

Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Letter> out;
    std::set_union(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
                   std::back_inserter(out));
    return Monomial(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Letter> out;
    std::set_intersection(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end(),
                          std::back_inserter(out));
    return out.empty();
}

Polynomial monic(Polynomial p)
{
    if (!p.is_zero()) {
        p *= p.leading_coefficient().inverse();
    }
    return p;
}

Polynomial shift(const Polynomial& p, const Monomial& m, const Scalar& c)
{
    Terms t;
    for (const auto& [pm, pc] : p.terms()) {
        std::vector<Monomial::Letter> letters;
        std::merge(pm.letters().begin(), pm.letters().end(), m.letters().begin(), m.letters().end(),
                   std::back_inserter(letters));
        add_term(t, Monomial(std::move(letters)), pc * c);
    }
    return Polynomial(p.algebra(), t);
}

void require_commutative(const AlgebraPtr& a, const char* what)
{
    if (a->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind(std::string(what) + " needs a commutative algebra, '" + a->name() + "' is " +
                              to_string(a->kind()));
    }
}

} // namespace

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& basis)
{
    Terms work = p.terms();
    Terms rest;
    while (!work.empty()) {
        const Monomial lead = work.begin()->first;
        const Scalar coeff = work.begin()->second;
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (divides(g.leading_monomial(), lead)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            add_term(rest, lead, coeff);
            work.erase(work.begin());
            continue;
        }
        const Monomial q = quotient(lead, divisor->leading_monomial());
        const Scalar factor = coeff / divisor->leading_coefficient();
        for (const auto& [gm, gc] : divisor->terms()) {
            std::vector<Monomial::Letter> letters;
            std::merge(gm.letters().begin(), gm.letters().end(), q.letters().begin(), q.letters().end(),
                       std::back_inserter(letters));
            add_term(work, Monomial(std::move(letters)), -(factor * gc));
        }
    }
    return Polynomial(p.algebra(), rest);
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators)
{
    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        require_commutative(g.algebra(), "groebner_basis");
        if (!g.is_zero()) {
            basis.push_back(monic(g));
        }
    }
    if (basis.empty()) {
        return basis;
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.emplace_back(i, j);
        }
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (coprime(li, lj)) {
            continue;
        }
        const Monomial l = lcm(li, lj);
        Polynomial s = shift(basis[i], quotient(l, li), Scalar(1)) - shift(basis[j], quotient(l, lj), Scalar(1));
        Polynomial r = reduce_by(s, basis);
        if (r.is_zero()) {
            continue;
        }
        basis.push_back(monic(std::move(r)));
        const std::size_t k = basis.size() - 1;
        for (std::size_t m = 0; m < k; ++m) {
            pairs.emplace_back(m, k);
        }
    }

    // Minimize, then inter-reduce.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) {
                continue;
            }
            const auto& la = basis[a].leading_monomial();
            const auto& lb = basis[b].leading_monomial();
            // Equal leading monomials: keep the first occurrence only.
            redundant = divides(lb, la) && (la != lb || b < a);
        }
        if (!redundant) {
            minimal.push_back(basis[a]);
        }
    }
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < minimal.size(); ++b) {
            if (b != a) {
                others.push_back(minimal[b]);
            }
        }
        // Leading term stays (no other leading monomial divides it).
        Polynomial tail = minimal[a] - Polynomial::monomial(minimal[a].algebra(), minimal[a].leading_monomial());
        reduced.push_back(monic(Polynomial::monomial(minimal[a].algebra(), minimal[a].leading_monomial()) +
                                reduce_by(tail, others)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare_degrevlex(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

// ---------------------------------------------------------------------------
// EchelonSpan

void EchelonSpan::insert(Terms row)
{
    row = reduce(std::move(row));
    if (row.empty()) {
        return;
    }
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [m, c] : row) {
        c *= inv;
    }
    const Monomial pivot = row.begin()->first;
    // Keep the span fully reduced: clear the new pivot from older rows.
    for (auto& [p, other] : rows_) {
        const auto it = other.find(pivot);
        if (it == other.end()) {
            continue;
        }
        const Scalar factor = it->second;
        for (const auto& [m, c] : row) {
            add_term(other, m, -(factor * c));
        }
    }
    rows_.emplace(pivot, std::move(row));
}

Terms EchelonSpan::reduce(Terms p) const
{
    auto it = p.begin();
    while (it != p.end()) {
        const auto piv = rows_.find(it->first);
        if (piv == rows_.end()) {
            ++it;
            continue;
        }
        const Monomial at = it->first;
        const Scalar factor = it->second;
        for (const auto& [m, c] : piv->second) {
            add_term(p, m, -(factor * c));
        }
        // Rows only add monomials below their pivot.
        it = p.upper_bound(at);
    }
    return p;
}

std::vector<Polynomial> EchelonSpan::basis() const
{
    std::vector<Polynomial> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) {
        out.emplace_back(algebra_, row);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(AlgebraPtr ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)), cache_(std::make_shared<Cache>())
{
    for (auto& g : generators) {
        if (!same_algebra(g.algebra(), ambient_)) {
            throw ShapeMismatch("ideal generator lives in '" + g.algebra()->name() + "', not in '" +
                                ambient_->name() + "'");
        }
        if (!g.is_zero()) {
            generators_.push_back(std::move(g));
        }
    }
    if (ambient_->kind() == AlgebraKind::commutative) {
        std::vector<Polynomial> all = generators_;
        for (const auto& rel : ambient_->relations()) {
            all.emplace_back(ambient_, rel);
        }
        groebner_ = coembed::groebner_basis(all);
    }
}

Ideal Ideal::relations_of(const AlgebraPtr& algebra) { return Ideal(algebra, {}); }

const std::vector<Polynomial>& Ideal::groebner_basis() const
{
    require_commutative(ambient_, "Ideal::groebner_basis");
    return groebner_;
}

Polynomial Ideal::remainder(const Polynomial& p) const
{
    return remainder(p, p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree()));
}

Polynomial Ideal::remainder(const Polynomial& p, std::size_t bound) const
{
    if (!same_algebra(p.algebra(), ambient_)) {
        throw ShapeMismatch("membership test of an element of '" + p.algebra()->name() + "' in an ideal of '" +
                            ambient_->name() + "'");
    }
    if (exact()) {
        return reduce_by(p, groebner_);
    }
    if (generators_.empty() && ambient_->relations().empty()) {
        return p;
    }
    if (ambient_->kind() == AlgebraKind::pbw && generators_.empty()) {
        return p;
    }
    return Polynomial(ambient_, span_at(bound).reduce(p.terms()));
}

const EchelonSpan& Ideal::span_at(std::size_t bound) const
{
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& slot = cache_->spans[bound];
    if (slot) {
        return *slot;
    }
    auto span = std::make_unique<EchelonSpan>(ambient_);
    std::vector<Polynomial> gens = generators_;
    if (ambient_->kind() == AlgebraKind::free) {
        for (const auto& rel : ambient_->relations()) {
            gens.emplace_back(ambient_, rel);
        }
    }
    const auto monomials = ambient_->monomials_up_to(bound);
    for (const auto& g : gens) {
        const auto gd = static_cast<std::size_t>(g.degree());
        if (gd > bound) {
            continue;
        }
        for (const auto& left : monomials) {
            if (left.degree() + gd > bound) {
                continue;
            }
            const Polynomial lg = Polynomial::monomial(ambient_, left) * g;
            for (const auto& right : monomials) {
                if (left.degree() + gd + right.degree() > bound) {
                    continue;
                }
                span->insert((lg * Polynomial::monomial(ambient_, right)).terms());
            }
        }
    }
    slot = std::move(span);
    return *slot;
}

std::vector<Polynomial> Ideal::truncated_basis(std::size_t d) const
{
    if (!exact()) {
        return span_at(d).basis();
    }
    // Multiples of the Groebner basis of I + J, then modulo I.
    const Ideal relations = relations_of(ambient_);
    EchelonSpan span(ambient_);
    const auto monomials = ambient_->monomials_up_to(d);
    for (const auto& g : groebner_) {
        for (const auto& m : monomials) {
            if (m.degree() + static_cast<std::size_t>(g.degree()) > d) {
                continue;
            }
            Polynomial mg = shift(g, m, Scalar(1));
            span.insert(relations.remainder(mg).terms());
        }
    }
    return span.basis();
}

std::vector<Monomial> Ideal::standard_monomials(std::size_t d) const
{
    std::vector<Monomial> out;
    const auto monomials = ambient_->monomials_up_to(d);
    if (exact()) {
        for (const auto& m : monomials) {
            const bool leading = std::any_of(groebner_.begin(), groebner_.end(), [&](const Polynomial& g) {
                return divides(g.leading_monomial(), m);
            });
            if (!leading) {
                out.push_back(m);
            }
        }
        return out;
    }
    if (generators_.empty() && (ambient_->kind() == AlgebraKind::pbw || ambient_->relations().empty())) {
        return monomials;
    }
    const EchelonSpan& span = span_at(d);
    for (const auto& m : monomials) {
        if (!span.is_pivot(m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::shared_ptr<const Ideal> relation_ideal(const AlgebraPtr& algebra)
{
    struct Entry {
        std::weak_ptr<const Algebra> owner;
        std::shared_ptr<const Ideal> ideal;
    };
    static std::mutex mutex;
    static std::map<const Algebra*, Entry> cache;

    std::lock_guard<std::mutex> lock(mutex);
    for (auto it = cache.begin(); it != cache.end();) {
        it = it->second.owner.expired() ? cache.erase(it) : std::next(it);
    }
    auto& entry = cache[algebra.get()];
    if (!entry.ideal) {
        entry.owner = algebra;
        entry.ideal = std::make_shared<const Ideal>(Ideal::relations_of(algebra));
    }
    return entry.ideal;
}

Polynomial reduce_relations(const Polynomial& p) { return relation_ideal(p.algebra())->remainder(p); }

Polynomial reduce_relations(const Polynomial& p, std::size_t bound)
{
    return relation_ideal(p.algebra())->remainder(p, bound);
}

bool ideal_member(const Ideal& ideal, const Polynomial& p) { return ideal.contains(p); }

std::vector<Polynomial> truncated_ideal_basis(const Ideal& ideal, std::size_t d) { return ideal.truncated_basis(d); }

} // namespace coembed
