#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// Sparse rational matrix, row-major with column-sorted rows. Used as the
/// elimination engine behind rank(): coboundary matrices at the dimensions we
/// care about are large but very sparse, and fill-in stays local because the
/// weight grading makes them block-diagonal up to permutation.
class SparseMatrixQ {
public:
    using Entry = std::pair<std::uint32_t, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrixQ from_dense(const MatrixQ& m);
    MatrixQ to_dense() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    /// Accumulates v into entry (r, c). Rows may be built in any order;
    /// call normalize() once before using the matrix.
    void add(std::size_t r, std::uint32_t c, const Rational& v);
    /// Sorts rows by column, merges duplicates, drops exact zeros.
    void normalize();

    bool is_zero() const;
    SparseMatrixQ operator*(const SparseMatrixQ& o) const;
    VectorQ apply(const VectorQ& v) const;

    /// Exact rank by sparse Gaussian elimination with sparsity-guided pivoting.
    std::size_t rank() const;

    /// Rank of [this | extra] where extra is appended as one extra column.
    std::size_t rank_with_column(const VectorQ& extra) const;

private:
    static std::size_t eliminate(std::vector<Row> work, std::size_t cols);

    std::size_t rows_, cols_;
    std::vector<Row> data_;
};

}  // namespace liecoh
