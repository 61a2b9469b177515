#include "liecoh/sparse.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace liecoh {

SparseMatrixQ SparseMatrixQ::from_dense(const MatrixQ& m) {
    SparseMatrixQ s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                s.data_[r].emplace_back(static_cast<std::uint32_t>(c), m.at(r, c));
    return s;
}

MatrixQ SparseMatrixQ::to_dense() const {
    MatrixQ m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            m.at(r, c) += v;
    return m;
}

std::size_t SparseMatrixQ::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

void SparseMatrixQ::add(std::size_t r, std::uint32_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("SparseMatrixQ::add: index out of range");
    if (!v.is_zero())
        data_[r].emplace_back(c, v);
}

void SparseMatrixQ::normalize() {
    for (auto& row : data_) {
        std::sort(row.begin(), row.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Row merged;
        merged.reserve(row.size());
        for (auto& e : row) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(std::move(e));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Entry& e) { return e.second.is_zero(); }),
                     merged.end());
        row = std::move(merged);
    }
}

bool SparseMatrixQ::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty())
            return false;
    return true;
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("SparseMatrixQ: product dimension mismatch");
    SparseMatrixQ r(rows_, o.cols_);
    VectorQ acc(o.cols_);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < rows_; ++i) {
        touched.clear();
        for (const auto& [k, aik] : data_[i]) {
            for (const auto& [j, bkj] : o.data_[k]) {
                if (acc[j].is_zero())
                    touched.push_back(j);
                acc[j] += aik * bkj;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (auto j : touched) {
            if (!acc[j].is_zero())
                r.data_[i].emplace_back(j, acc[j]);
            acc[j] = Rational(0);
        }
    }
    return r;
}

VectorQ SparseMatrixQ::apply(const VectorQ& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("SparseMatrixQ: apply dimension mismatch");
    VectorQ r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [c, x] : data_[i])
            if (!v[c].is_zero())
                r[i] += x * v[c];
    return r;
}

namespace {

const Rational* row_find(const SparseMatrixQ::Row& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const SparseMatrixQ::Entry& e, std::uint32_t c) {
                                   return e.first < c;
                               });
    if (it != row.end() && it->first == col)
        return &it->second;
    return nullptr;
}

// dst - factor * piv, both column-sorted; exact zeros dropped
SparseMatrixQ::Row row_subtract(const SparseMatrixQ::Row& dst, const Rational& factor,
                                const SparseMatrixQ::Row& piv) {
    SparseMatrixQ::Row out;
    out.reserve(dst.size() + piv.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < piv.size()) {
        if (b == piv.size() || (a < dst.size() && dst[a].first < piv[b].first)) {
            out.push_back(dst[a++]);
        } else if (a == dst.size() || piv[b].first < dst[a].first) {
            out.emplace_back(piv[b].first, -(factor * piv[b].second));
            ++b;
        } else {
            Rational v = dst[a].second - factor * piv[b].second;
            if (!v.is_zero())
                out.emplace_back(dst[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

std::size_t SparseMatrixQ::eliminate(std::vector<Row> work, std::size_t cols) {
    const std::size_t nrows = work.size();
    std::vector<char> active(nrows, 1);
    std::vector<std::uint32_t> colcount(cols, 0);
    std::vector<std::vector<std::uint32_t>> col_rows(cols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (const auto& [c, v] : work[r]) {
            ++colcount[c];
            col_rows[c].push_back(static_cast<std::uint32_t>(r));
        }

    std::size_t rk = 0;
    for (;;) {
        // pivot column: fewest active entries, lowest index on ties
        std::uint32_t best_col = 0;
        std::uint32_t best_cnt = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t c = 0; c < cols; ++c)
            if (colcount[c] > 0 && colcount[c] < best_cnt) {
                best_cnt = colcount[c];
                best_col = c;
                if (best_cnt == 1)
                    break;
            }
        if (best_cnt == std::numeric_limits<std::uint32_t>::max())
            break;

        // candidate rows, with stale index entries filtered out
        auto& cand = col_rows[best_col];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        cand.erase(std::remove_if(cand.begin(), cand.end(),
                                  [&](std::uint32_t r) {
                                      return !active[r] || row_find(work[r], best_col) == nullptr;
                                  }),
                   cand.end());

        // pivot row: shortest, lowest index on ties
        std::uint32_t best_row = cand.front();
        for (auto r : cand)
            if (work[r].size() < work[best_row].size())
                best_row = r;

        const Row piv = std::move(work[best_row]);
        work[best_row].clear();
        active[best_row] = 0;
        ++rk;
        for (const auto& [c, v] : piv)
            --colcount[c];
        const Rational pval = *row_find(piv, best_col);

        for (auto r : cand) {
            if (r == best_row)
                continue;
            const Rational* entry = row_find(work[r], best_col);
            const Rational factor = *entry / pval;
            for (const auto& [c, v] : work[r])
                --colcount[c];
            Row updated = row_subtract(work[r], factor, piv);
            for (const auto& [c, v] : updated) {
                ++colcount[c];
                if (row_find(work[r], c) == nullptr)
                    col_rows[c].push_back(r);
            }
            work[r] = std::move(updated);
        }
        cand.clear();
    }
    return rk;
}

std::size_t SparseMatrixQ::rank() const {
    return eliminate(data_, cols_);
}

std::size_t SparseMatrixQ::rank_with_column(const VectorQ& extra) const {
    if (extra.size() != rows_)
        throw std::invalid_argument("rank_with_column: length must match row count");
    std::vector<Row> work = data_;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!extra[r].is_zero())
            work[r].emplace_back(static_cast<std::uint32_t>(cols_), extra[r]);
    return eliminate(std::move(work), cols_ + 1);
}

}  // namespace liecoh
