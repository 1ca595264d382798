#include "coembed/kaehler.hpp"

#include "coembed/errors.hpp"
#include "coembed/linalg.hpp"

#include <map>

namespace coembed {

namespace {

void require_commutative(const AlgebraPtr& a, const char* what)
{
    if (a->kind() != AlgebraKind::commutative) {
        throw UnsupportedKind(std::string(what) + " needs a commutative algebra, '" + a->name() + "' is " +
                              to_string(a->kind()));
    }
}

// Linear equations "sum_col x_col * value_col == rhs" in a free module of
// rank n over K[x]/I, one equation per (component, remainder monomial).
class ModuleSystem {
public:
    explicit ModuleSystem(std::size_t columns) : solver_(columns) {}

    void add(const std::vector<std::pair<std::size_t, Differential>>& values, const Differential& rhs)
    {
        std::map<std::pair<std::size_t, Monomial>, std::pair<linalg::SparseRow, Scalar>> rows;
        for (const auto& [col, value] : values) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                const Polynomial reduced = reduce_relations(value[i]);
                for (const auto& [m, c] : reduced.terms()) {
                    rows[{i, m}].first[col] += c;
                }
            }
        }
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            const Polynomial reduced = reduce_relations(rhs[i]);
            for (const auto& [m, c] : reduced.terms()) {
                rows[{i, m}].second += c;
            }
        }
        for (auto& [key, row] : rows) {
            solver_.add(std::move(row.first), row.second);
        }
    }

    linalg::Solution solve() const { return solver_.solve(); }

private:
    linalg::IncrementalSolver solver_;
};

Differential scaled(const Differential& v, const Polynomial& a)
{
    Differential out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.push_back(a * e);
    }
    return out;
}

} // namespace

KaehlerPresentation kaehler_presentation(const AlgebraPtr& algebra)
{
    require_commutative(algebra, "kaehler_presentation");
    KaehlerPresentation out{algebra, {}};
    for (const auto& r : algebra->relations()) {
        out.rows.push_back(universal_d(Polynomial(algebra, r)));
    }
    return out;
}

Differential universal_d(const Polynomial& f)
{
    require_commutative(f.algebra(), "universal_d");
    Differential out;
    for (std::size_t i = 0; i < f.algebra()->generator_count(); ++i) {
        out.push_back(reduce_relations(partial_derivative(f, i)));
    }
    return out;
}

bool is_module_map(const KaehlerPresentation& omega, const std::vector<Polynomial>& f)
{
    if (f.size() != omega.rank()) {
        throw ShapeMismatch("module map needs one value per dx_i");
    }
    for (const auto& row : omega.rows) {
        Polynomial acc(omega.base);
        for (std::size_t i = 0; i < row.size(); ++i) {
            acc += f[i] * row[i];
        }
        if (!reduce_relations(acc).is_zero()) {
            return false;
        }
    }
    return true;
}

HomDerCorrespondence hom_der_correspondence(const KaehlerPresentation& omega, std::size_t d)
{
    const auto& base = omega.base;
    const auto monomials = relation_ideal(base)->standard_monomials(d);
    const std::size_t n = omega.rank();
    linalg::IncrementalSolver solver(n * monomials.size());

    // One scalar equation per (row, remainder monomial) of sum_i f_i row[i].
    for (const auto& row : omega.rows) {
        std::map<Monomial, linalg::SparseRow, MonomialGreater> eqs;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < monomials.size(); ++k) {
                const Polynomial v = reduce_relations(Polynomial::monomial(base, monomials[k]) * row[i]);
                for (const auto& [m, c] : v.terms()) {
                    eqs[m][i * monomials.size() + k] += c;
                }
            }
        }
        for (auto& [m, eq] : eqs) {
            solver.add(std::move(eq));
        }
    }

    HomDerCorrespondence out;
    out.degree_bound = d;
    for (const auto& v : solver.solve().kernel) {
        std::vector<Polynomial> f;
        for (std::size_t i = 0; i < n; ++i) {
            Terms t;
            for (std::size_t k = 0; k < monomials.size(); ++k) {
                add_term(t, monomials[k], v[i * monomials.size() + k]);
            }
            f.emplace_back(base, t);
        }
        out.derivations.emplace_back(base, f);
        out.module_maps.push_back(std::move(f));
    }
    return out;
}

std::vector<Differential> induced_map(const AlgebraHom& pi)
{
    require_commutative(pi.domain(), "induced_map");
    require_commutative(pi.codomain(), "induced_map");
    std::vector<Differential> rows;
    for (const auto& y : pi.images()) {
        rows.push_back(universal_d(y));
    }
    return rows;
}

Differential apply_induced(const AlgebraHom& pi, const std::vector<Differential>& matrix, const Differential& w)
{
    if (w.size() != matrix.size()) {
        throw ShapeMismatch("differential has the wrong rank for the induced map");
    }
    Differential out(pi.codomain()->generator_count(), Polynomial(pi.codomain()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Polynomial a = pi.apply(w[i]);
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += a * matrix[i][j];
        }
    }
    for (auto& e : out) {
        e = reduce_relations(e);
    }
    return out;
}

bool induced_map_surjective(const AlgebraHom& pi, std::size_t bound)
{
    const auto matrix = induced_map(pi);
    const auto omega = kaehler_presentation(pi.codomain());
    const auto& b = pi.codomain();
    const auto monomials = relation_ideal(b)->standard_monomials(bound);

    // Generators of the image plus the relations of Omega_B, each scaled by
    // every standard monomial of degree <= bound.
    std::vector<Differential> spanning = matrix;
    spanning.insert(spanning.end(), omega.rows.begin(), omega.rows.end());
    std::vector<Differential> columns;
    for (const auto& v : spanning) {
        for (const auto& m : monomials) {
            columns.push_back(scaled(v, Polynomial::monomial(b, m)));
        }
    }
    for (std::size_t j = 0; j < b->generator_count(); ++j) {
        ModuleSystem system(columns.size());
        std::vector<std::pair<std::size_t, Differential>> values;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            values.emplace_back(c, columns[c]);
        }
        Differential dy(b->generator_count(), Polynomial(b));
        dy[j] = Polynomial::constant(b, Scalar(1));
        system.add(values, dy);
        if (!system.solve().feasible) {
            return false;
        }
    }
    return true;
}

} // namespace coembed
