#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Dense row-major rational matrix.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    MatrixQ(std::initializer_list<std::initializer_list<Rational>> init);

    static MatrixQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2);
    VectorQ row(std::size_t r) const;
    VectorQ col(std::size_t c) const;

    bool is_zero() const;
    MatrixQ operator*(const MatrixQ& o) const;
    VectorQ operator*(const VectorQ& v) const;
    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form. Returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(MatrixQ& m);

/// Exact rank over the rationals.
std::size_t rank(const MatrixQ& m);

/// Basis of {v : m v = 0}. Size is always cols − rank; canonical (one basis
/// vector per free column of the RREF, free columns in ascending order).
std::vector<VectorQ> nullspace_basis(const MatrixQ& m);

struct AffineSolution {
    VectorQ particular;
    std::vector<VectorQ> homogeneous;
};

/// Full solution set of m x = b, or nullopt when inconsistent.
/// Throws std::invalid_argument on a row/length mismatch.
std::optional<AffineSolution> solve_affine(const MatrixQ& m, const VectorQ& b);

/// (rank m, rank m^2, ..., rank m^max_power). Throws on non-square input.
std::vector<std::size_t> power_rank_sequence(const MatrixQ& m, std::size_t max_power);

/// Rank of the matrix whose rows are the given vectors.
std::size_t span_rank(const std::vector<VectorQ>& vectors, std::size_t ambient_dim);

/// Row-reduces the given spanning set to a canonical basis (RREF rows).
std::vector<VectorQ> span_basis(const std::vector<VectorQ>& vectors, std::size_t ambient_dim);

/// True iff v lies in the span of the given (arbitrary) vectors.
bool in_span(const std::vector<VectorQ>& vectors, const VectorQ& v);

}  // namespace liecoh
