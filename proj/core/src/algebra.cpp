#include "coembed/algebra.hpp"

#include "coembed/errors.hpp"

#include <algorithm>
#include <set>

namespace coembed {

namespace {

constexpr std::size_t rewrite_budget = 2'000'000;

Monomial splice(const std::vector<Monomial::Letter>& word, std::size_t at, const Monomial& middle)
{
    std::vector<Monomial::Letter> out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(at));
    out.insert(out.end(), middle.letters().begin(), middle.letters().end());
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(at + 2), word.end());
    return Monomial(std::move(out));
}

Monomial sorted(const Monomial& m)
{
    auto letters = m.letters();
    std::sort(letters.begin(), letters.end());
    return Monomial(std::move(letters));
}

std::string word_name(const std::vector<std::string>& gens, const Monomial& m)
{
    std::string s;
    for (auto l : m.letters()) {
        if (!s.empty()) {
            s += "*";
        }
        s += gens.at(l);
    }
    return s.empty() ? "1" : s;
}

} // namespace

std::string to_string(AlgebraKind kind)
{
    switch (kind) {
    case AlgebraKind::free:
        return "free";
    case AlgebraKind::commutative:
        return "commutative";
    case AlgebraKind::pbw:
        return "pbw";
    }
    return "?";
}

std::string to_string(ScalarField field) { return field == ScalarField::rational ? "Q" : "Qi"; }

AlgebraPtr Algebra::create(AlgebraSpec spec, ConfluencePolicy policy)
{
    std::set<std::string> seen;
    for (const auto& g : spec.generators) {
        if (g.empty()) {
            throw InvalidInput("empty generator name in algebra '" + spec.name + "'");
        }
        if (!seen.insert(g).second) {
            throw InvalidInput("duplicate generator '" + g + "' in algebra '" + spec.name + "'");
        }
    }
    const std::size_t n = spec.generators.size();
    for (const auto& rel : spec.relations) {
        for (const auto& [m, c] : rel) {
            for (auto l : m.letters()) {
                if (l >= n) {
                    throw InvalidInput("relation uses generator index out of range");
                }
            }
            if (spec.field == ScalarField::rational && !c.is_real()) {
                throw InvalidInput("relation with imaginary coefficient over Q in algebra '" + spec.name + "'");
            }
        }
    }

    std::shared_ptr<Algebra> a(new Algebra());
    a->name_ = std::move(spec.name);
    a->kind_ = spec.kind;
    a->field_ = spec.field;
    a->generators_ = std::move(spec.generators);

    switch (a->kind_) {
    case AlgebraKind::free:
        for (auto& rel : spec.relations) {
            if (!rel.empty()) {
                a->relations_.push_back(std::move(rel));
            }
        }
        break;
    case AlgebraKind::commutative:
        for (const auto& rel : spec.relations) {
            Terms merged = a->normal_form(rel);
            if (!merged.empty()) {
                a->relations_.push_back(std::move(merged));
            }
        }
        break;
    case AlgebraKind::pbw:
        a->relations_ = std::move(spec.relations);
        a->install_pbw_rules();
        if (policy == ConfluencePolicy::enforce) {
            const auto report = check_pbw_confluence(*a);
            if (!report.confluent) {
                const auto& f = report.failures.front();
                throw InvalidInput("PBW presentation '" + a->name_ + "' is not confluent on the overlap " +
                                   a->generators_[f.k] + "*" + a->generators_[f.j] + "*" + a->generators_[f.i]);
            }
        }
        break;
    }
    return a;
}

AlgebraPtr Algebra::free(std::string name, std::vector<std::string> generators, ScalarField field)
{
    return create(AlgebraSpec{std::move(name), AlgebraKind::free, field, std::move(generators), {}});
}

AlgebraPtr Algebra::polynomial_ring(std::string name, std::vector<std::string> generators, ScalarField field)
{
    return create(AlgebraSpec{std::move(name), AlgebraKind::commutative, field, std::move(generators), {}});
}

void Algebra::install_pbw_rules()
{
    const std::size_t n = generators_.size();
    pbw_tails_.assign(n * n, Terms{});
    std::vector<bool> have(n * n, false);

    for (const auto& rel : relations_) {
        // The leading word of a commutation relation is the one unsorted word.
        std::optional<Monomial> lead;
        for (const auto& [m, c] : rel) {
            if (!m.is_sorted()) {
                if (lead || m.degree() != 2) {
                    throw InvalidInput("PBW relation in '" + name_ +
                                       "' must contain exactly one unsorted word, of degree 2");
                }
                lead = m;
            }
        }
        if (!lead) {
            throw InvalidInput("PBW relation in '" + name_ + "' has no commutation word x_j*x_i with j > i");
        }
        const std::size_t j = lead->letters()[0];
        const std::size_t i = lead->letters()[1];
        if (have[j * n + i]) {
            throw InvalidInput("two PBW relations for the pair (" + generators_[j] + ", " + generators_[i] + ")");
        }
        have[j * n + i] = true;

        // r / c = x_j x_i - x_i x_j - q  =>  q = x_j x_i - x_i x_j - r / c.
        const Scalar c = rel.at(*lead);
        const Monomial swapped{static_cast<Monomial::Letter>(i), static_cast<Monomial::Letter>(j)};
        const auto it = rel.find(swapped);
        if (it == rel.end() || it->second != -c) {
            throw InvalidInput("PBW relation for (" + generators_[j] + ", " + generators_[i] + ") in '" + name_ +
                               "' is not of the form x_j*x_i - x_i*x_j - q");
        }
        Terms tail;
        const Scalar inv = c.inverse();
        for (const auto& [m, coeff] : rel) {
            if (m == *lead || m == swapped) {
                continue;
            }
            add_term(tail, m, -(coeff * inv));
        }
        for (const auto& [m, coeff] : tail) {
            if (m.degree() > 2) {
                throw InvalidInput("PBW tail for (" + generators_[j] + ", " + generators_[i] +
                                   ") has degree > 2: " + word_name(generators_, m));
            }
            if (compare_degrevlex(m, swapped) >= 0) {
                throw InvalidInput("PBW tail term " + word_name(generators_, m) + " is not smaller than " +
                                   word_name(generators_, swapped) + " in degrevlex order");
            }
        }
        pbw_tails_[j * n + i] = std::move(tail);
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!have[j * n + i]) {
                throw InvalidInput("PBW algebra '" + name_ + "' lacks a relation for the pair (" + generators_[j] +
                                   ", " + generators_[i] + ")");
            }
        }
    }
}

std::optional<std::size_t> Algebra::index_of(const std::string& generator) const
{
    const auto it = std::find(generators_.begin(), generators_.end(), generator);
    if (it == generators_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t Algebra::max_relation_degree() const
{
    std::size_t d = 0;
    for (const auto& rel : relations_) {
        if (!rel.empty()) {
            d = std::max(d, rel.begin()->first.degree());
        }
    }
    return d;
}

const Terms& Algebra::pbw_tail(std::size_t j, std::size_t i) const
{
    if (kind_ != AlgebraKind::pbw || j <= i || j >= generators_.size()) {
        throw ShapeMismatch("pbw_tail requires a PBW algebra and j > i");
    }
    return pbw_tails_[j * generators_.size() + i];
}

Terms Algebra::normal_form(const Terms& terms) const
{
    switch (kind_) {
    case AlgebraKind::free: {
        Terms out;
        for (const auto& [m, c] : terms) {
            add_term(out, m, c);
        }
        return out;
    }
    case AlgebraKind::commutative: {
        Terms out;
        for (const auto& [m, c] : terms) {
            add_term(out, m.is_sorted() ? m : sorted(m), c);
        }
        return out;
    }
    case AlgebraKind::pbw:
        return rewrite_pbw(terms);
    }
    return {};
}

Terms Algebra::rewrite_pbw(const Terms& terms) const
{
    const std::size_t n = generators_.size();
    Terms pending;
    for (const auto& [m, c] : terms) {
        add_term(pending, m, c);
    }
    Terms result;
    std::size_t steps = 0;
    // Every rewrite replaces a word by strictly smaller ones, so always
    // taking the largest pending word terminates and merges like terms.
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const auto& letters = node.key().letters();
        std::size_t p = 0;
        while (p + 1 < letters.size() && letters[p] <= letters[p + 1]) {
            ++p;
        }
        if (p + 1 >= letters.size()) {
            add_term(result, node.key(), node.mapped());
            continue;
        }
        if (++steps > rewrite_budget) {
            throw RewriteBudgetExceeded("PBW rewriting in '" + name_ + "' exceeded its budget");
        }
        const auto j = letters[p];
        const auto i = letters[p + 1];
        const Scalar& c = node.mapped();
        add_term(pending, splice(letters, p, Monomial{i, j}), c);
        for (const auto& [t, tc] : pbw_tails_[j * n + i]) {
            add_term(pending, splice(letters, p, t), c * tc);
        }
    }
    return result;
}

Terms Algebra::multiply(const Terms& a, const Terms& b) const
{
    Terms raw;
    if (kind_ == AlgebraKind::commutative) {
        for (const auto& [ma, ca] : a) {
            for (const auto& [mb, cb] : b) {
                std::vector<Monomial::Letter> letters;
                letters.reserve(ma.degree() + mb.degree());
                std::merge(ma.letters().begin(), ma.letters().end(), mb.letters().begin(), mb.letters().end(),
                           std::back_inserter(letters));
                add_term(raw, Monomial(std::move(letters)), ca * cb);
            }
        }
        return raw;
    }
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            add_term(raw, ma * mb, ca * cb);
        }
    }
    return kind_ == AlgebraKind::pbw ? rewrite_pbw(raw) : raw;
}

bool Algebra::is_normal(const Monomial& m) const noexcept
{
    return kind_ == AlgebraKind::free || m.is_sorted();
}

std::vector<Monomial> Algebra::monomials_up_to(std::size_t d) const
{
    const auto n = static_cast<Monomial::Letter>(generators_.size());
    std::vector<Monomial> out{Monomial()};
    std::vector<Monomial> layer{Monomial()};
    for (std::size_t deg = 1; deg <= d; ++deg) {
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            const Monomial::Letter start =
                (kind_ == AlgebraKind::free || m.is_one()) ? 0 : m.letters().back();
            for (Monomial::Letter g = start; g < n; ++g) {
                next.push_back(m * Monomial::generator(g));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) < 0; });
    return out;
}

bool Algebra::same_presentation(const Algebra& other) const
{
    return kind_ == other.kind_ && field_ == other.field_ && generators_ == other.generators_ &&
           relations_ == other.relations_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && a->same_presentation(*b));
}

ConfluenceReport check_pbw_confluence(const Algebra& algebra)
{
    if (algebra.kind() != AlgebraKind::pbw) {
        throw UnsupportedKind("check_pbw_confluence requires a PBW algebra, got " + to_string(algebra.kind()));
    }
    ConfluenceReport report;
    const auto n = static_cast<Monomial::Letter>(algebra.generator_count());
    for (Monomial::Letter k = 0; k < n; ++k) {
        for (Monomial::Letter j = 0; j < k; ++j) {
            for (Monomial::Letter i = 0; i < j; ++i) {
                // x_k x_j x_i with x_k x_j rewritten first ...
                Terms left;
                add_term(left, Monomial{j, k, i}, Scalar(1));
                for (const auto& [t, c] : algebra.pbw_tail(k, j)) {
                    add_term(left, t * Monomial{i}, c);
                }
                // ... and with x_j x_i rewritten first.
                Terms right;
                add_term(right, Monomial{k, i, j}, Scalar(1));
                for (const auto& [t, c] : algebra.pbw_tail(j, i)) {
                    add_term(right, Monomial{k} * t, c);
                }
                Terms nl = algebra.normal_form(left);
                Terms nr = algebra.normal_form(right);
                if (nl != nr) {
                    report.confluent = false;
                    report.failures.push_back(ConfluenceFailure{k, j, i, std::move(nl), std::move(nr)});
                }
            }
        }
    }
    return report;
}

} // namespace coembed
