#pragma once

#include "coembed/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace coembed::linalg {

// Sparse row: column index -> nonzero entry.
using SparseRow = std::map<std::size_t, Scalar>;
using Vector = std::vector<Scalar>;

struct Solution {
    bool feasible = false;
    std::size_t rank = 0;
    // Free variables set to zero.
    Vector particular;
    // One vector per free column, in increasing column order.
    std::vector<Vector> kernel;
};

// Exact Gaussian elimination fed one equation at a time.
//
// Pivot rows are kept in echelon form: each row's smallest column is its
// pivot with coefficient 1. Incoming rows are reduced against existing
// pivots before they are stored, so the pivot set always has minimal size
// and a zero row with nonzero right-hand side flags the system inconsistent.
class IncrementalSolver {
public:
    explicit IncrementalSolver(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool consistent() const noexcept { return consistent_; }

    // Adds sum_c row[c] * x_c = rhs. Zero entries in `row` are ignored.
    void add(SparseRow row, Scalar rhs = Scalar());

    // Remainder of `row` after elimination by the stored pivots; empty iff
    // the row lies in the span of the rows added so far.
    SparseRow reduce(SparseRow row) const;
    bool in_span(const SparseRow& row) const { return reduce(row).empty(); }

    Solution solve() const;

private:
    struct PivotRow {
        SparseRow row;
        Scalar rhs;
    };

    // Returns the reduced right-hand side alongside the row.
    void eliminate(SparseRow& row, Scalar& rhs) const;

    std::size_t columns_;
    std::map<std::size_t, PivotRow> pivots_;
    bool consistent_ = true;
};

// Dense convenience wrapper: rows of a matrix, every row has `columns` entries.
Solution solve_dense(const std::vector<Vector>& rows, const Vector& rhs, std::size_t columns);

std::size_t rank(const std::vector<Vector>& rows, std::size_t columns);

SparseRow to_sparse(const Vector& v);

} // namespace coembed::linalg
