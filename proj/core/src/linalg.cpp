#include "coembed/linalg.hpp"

#include "coembed/errors.hpp"

#include <string>

namespace coembed::linalg {

namespace {

void drop_zeros(SparseRow& row)
{
    for (auto it = row.begin(); it != row.end();) {
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
}

} // namespace

void IncrementalSolver::eliminate(SparseRow& row, Scalar& rhs) const
{
    auto it = row.begin();
    while (it != row.end()) {
        const std::size_t col = it->first;
        const auto piv = pivots_.find(col);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        const Scalar factor = it->second;
        for (const auto& [c, v] : piv->second.row) {
            auto [slot, inserted] = row.try_emplace(c);
            slot->second -= factor * v;
            if (slot->second.is_zero()) {
                row.erase(slot);
            }
        }
        rhs -= factor * piv->second.rhs;
        it = row.upper_bound(col);
    }
}

void IncrementalSolver::add(SparseRow row, Scalar rhs)
{
    drop_zeros(row);
    for (const auto& [c, v] : row) {
        if (c >= columns_) {
            throw ShapeMismatch("column " + std::to_string(c) + " outside system of " +
                                std::to_string(columns_) + " unknowns");
        }
    }
    eliminate(row, rhs);
    if (row.empty()) {
        if (!rhs.is_zero()) {
            consistent_ = false;
        }
        return;
    }
    const Scalar lead_inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) {
        v *= lead_inv;
    }
    rhs *= lead_inv;
    const std::size_t pivot = row.begin()->first;
    pivots_.emplace(pivot, PivotRow{std::move(row), std::move(rhs)});
}

SparseRow IncrementalSolver::reduce(SparseRow row) const
{
    drop_zeros(row);
    Scalar rhs;
    eliminate(row, rhs);
    return row;
}

Solution IncrementalSolver::solve() const
{
    Solution sol;
    sol.rank = pivots_.size();
    sol.feasible = consistent_;
    if (!consistent_) {
        return sol;
    }

    // Back substitution over pivots in decreasing column order.
    auto back_substitute = [&](Vector& x, bool homogeneous) {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Scalar value = homogeneous ? Scalar() : it->second.rhs;
            for (const auto& [c, v] : it->second.row) {
                if (c != it->first && !x[c].is_zero()) {
                    value -= v * x[c];
                }
            }
            x[it->first] = std::move(value);
        }
    };

    sol.particular.assign(columns_, Scalar());
    back_substitute(sol.particular, false);

    for (std::size_t free = 0; free < columns_; ++free) {
        if (pivots_.count(free) != 0) {
            continue;
        }
        Vector k(columns_, Scalar());
        k[free] = Scalar(1);
        back_substitute(k, true);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

SparseRow to_sparse(const Vector& v)
{
    SparseRow row;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
            row.emplace(c, v[c]);
        }
    }
    return row;
}

Solution solve_dense(const std::vector<Vector>& rows, const Vector& rhs, std::size_t columns)
{
    IncrementalSolver solver(columns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        solver.add(to_sparse(rows[r]), rhs.empty() ? Scalar() : rhs[r]);
    }
    return solver.solve();
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t columns)
{
    IncrementalSolver solver(columns);
    for (const auto& r : rows) {
        solver.add(to_sparse(r));
    }
    return solver.rank();
}

} // namespace coembed::linalg
