#include "liecoh/matrix.hpp"

#include <stdexcept>

#include "liecoh/sparse.hpp"

namespace liecoh {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw std::invalid_argument("MatrixQ: ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

void MatrixQ::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(r1, c), at(r2, c));
}

VectorQ MatrixQ::row(std::size_t r) const {
    return VectorQ(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

VectorQ MatrixQ::col(std::size_t c) const {
    VectorQ v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

bool MatrixQ::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

MatrixQ MatrixQ::operator*(const MatrixQ& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("MatrixQ: product dimension mismatch");
    MatrixQ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero())
                    r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

VectorQ MatrixQ::operator*(const VectorQ& v) const {
    if (cols_ != v.size())
        throw std::invalid_argument("MatrixQ: apply dimension mismatch");
    VectorQ r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::size_t> rref_in_place(MatrixQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(row, pr);
        const Rational inv = m.at(row, col).reciprocal();
        if (!inv.is_one())
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m.at(row, c).is_zero())
                    m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero())
                continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m.at(row, c).is_zero())
                    m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const MatrixQ& m) {
    return SparseMatrixQ::from_dense(m).rank();
}

std::vector<VectorQ> nullspace_basis(const MatrixQ& m) {
    MatrixQ r = m;
    const auto pivots = rref_in_place(r);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<VectorQ> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        VectorQ v(m.cols());
        v[free] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -r.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const MatrixQ& m, const VectorQ& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_affine: rhs length does not match row count");
    MatrixQ aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;  // pivot in the rhs column
    AffineSolution sol;
    sol.particular.assign(m.cols(), Rational(0));
    for (std::size_t p = 0; p < pivots.size(); ++p)
        sol.particular[pivots[p]] = aug.at(p, m.cols());
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        VectorQ v(m.cols());
        v[free] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -aug.at(p, free);
        sol.homogeneous.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::size_t> power_rank_sequence(const MatrixQ& m, std::size_t max_power) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("power_rank_sequence: matrix must be square");
    std::vector<std::size_t> seq;
    seq.reserve(max_power);
    MatrixQ cur = m;
    for (std::size_t k = 1; k <= max_power; ++k) {
        seq.push_back(rank(cur));
        if (k < max_power)
            cur = cur * m;
    }
    return seq;
}

std::size_t span_rank(const std::vector<VectorQ>& vectors, std::size_t ambient_dim) {
    MatrixQ m(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c)
            m.at(r, c) = vectors[r][c];
    return rank(m);
}

std::vector<VectorQ> span_basis(const std::vector<VectorQ>& vectors, std::size_t ambient_dim) {
    MatrixQ m(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c)
            m.at(r, c) = vectors[r][c];
    const auto pivots = rref_in_place(m);
    std::vector<VectorQ> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        basis.push_back(m.row(r));
    return basis;
}

bool in_span(const std::vector<VectorQ>& vectors, const VectorQ& v) {
    if (vectors.empty())
        return vq_is_zero(v);
    const std::size_t n = v.size();
    std::vector<VectorQ> with = vectors;
    with.push_back(v);
    return span_rank(vectors, n) == span_rank(with, n);
}

}  // namespace liecoh
