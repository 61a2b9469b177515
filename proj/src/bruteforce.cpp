#include "liecoh/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace liecoh::bruteforce {

namespace {

using Tuple = std::vector<std::uint32_t>;

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

void ascending_tuples(std::size_t n, std::size_t p, std::size_t start, Tuple& cur,
                      std::vector<Tuple>& out) {
    if (cur.size() == p) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(static_cast<std::uint32_t>(i));
        ascending_tuples(n, p, i + 1, cur, out);
        cur.pop_back();
    }
}

int permutation_sign(const Tuple& perm, const Tuple& sorted) {
    // parity by counting inversions relative to the sorted tuple
    Tuple pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        pos[i] = static_cast<std::uint32_t>(
            std::find(sorted.begin(), sorted.end(), perm[i]) - sorted.begin());
    int inv = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// full tensor of one basis cochain: value on every ordered tuple
std::map<Tuple, VectorQ> full_tensor(const Tuple& base, std::uint32_t target, std::size_t n) {
    std::map<Tuple, VectorQ> tensor;
    Tuple perm = base;
    std::sort(perm.begin(), perm.end());
    do {
        VectorQ v(n);
        v[target] = Rational(permutation_sign(perm, base));
        tensor[perm] = std::move(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tensor;
}

VectorQ lookup(const std::map<Tuple, VectorQ>& tensor, const Tuple& t, std::size_t n) {
    auto it = tensor.find(t);
    return it == tensor.end() ? VectorQ(n) : it->second;
}

std::size_t plain_rank(std::vector<VectorQ> rows) {
    std::size_t rank = 0, ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t q = r + 1; q < rows.size(); ++q) {
            if (rows[q][c].is_zero())
                continue;
            const Rational f = rows[q][c] / rows[r][c];
            for (std::size_t cc = c; cc < ncols; ++cc)
                rows[q][cc] -= f * rows[r][cc];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// matrix of delta : C^p -> C^{p+1}, rows as vectors (one per flat output coordinate)
std::vector<VectorQ> delta_matrix_rows(const LieAlgebra& g, std::size_t p) {
    const std::size_t n = g.dim();
    std::vector<Tuple> dom, codom;
    {
        Tuple cur;
        ascending_tuples(n, p, 0, cur, dom);
        cur.clear();
        ascending_tuples(n, p + 1, 0, cur, codom);
    }
    const std::size_t out_dim = codom.size() * n;
    const std::size_t in_dim = dom.size() * n;
    std::vector<VectorQ> rows(out_dim, VectorQ(in_dim));
    for (std::size_t col_t = 0; col_t < dom.size(); ++col_t)
        for (std::uint32_t target = 0; target < n; ++target) {
            const std::size_t col = col_t * n + target;
            const auto tensor = full_tensor(dom[col_t], target, n);
            for (std::size_t row_t = 0; row_t < codom.size(); ++row_t) {
                const Tuple& J = codom[row_t];
                VectorQ value(n);
                for (std::size_t s = 0; s < J.size(); ++s) {
                    Tuple rest;
                    for (std::size_t q = 0; q < J.size(); ++q)
                        if (q != s)
                            rest.push_back(J[q]);
                    const VectorQ inner = lookup(tensor, rest, n);
                    if (!vq_is_zero(inner)) {
                        VectorQ e(n);
                        e[J[s]] = Rational(1);
                        vq_axpy(value, Rational(s % 2 == 0 ? 1 : -1), g.bracket(e, inner));
                    }
                }
                for (std::size_t s = 0; s + 1 < J.size(); ++s)
                    for (std::size_t t = s + 1; t < J.size(); ++t) {
                        const VectorQ br = g.bracket_basis(J[s], J[t]);
                        Tuple rest;
                        for (std::size_t q = 0; q < J.size(); ++q)
                            if (q != s && q != t)
                                rest.push_back(J[q]);
                        for (std::uint32_t x = 0; x < n; ++x) {
                            if (br[x].is_zero())
                                continue;
                            Tuple arg{x};
                            arg.insert(arg.end(), rest.begin(), rest.end());
                            const VectorQ inner = lookup(tensor, arg, n);
                            if (!vq_is_zero(inner))
                                vq_axpy(value, Rational((s + t) % 2 == 0 ? 1 : -1) * br[x],
                                        inner);
                        }
                    }
                for (std::uint32_t r = 0; r < n; ++r)
                    if (!value[r].is_zero())
                        rows[row_t * n + r][col] = value[r];
            }
        }
    return rows;
}

}  // namespace

Dims cohomology_dims(const LieAlgebra& g, std::size_t p) {
    const std::size_t n = g.dim();
    Dims d;
    d.dim_cochains = n * choose(n, p);
    const std::size_t rank_p = plain_rank(delta_matrix_rows(g, p));
    d.dim_cocycles = d.dim_cochains - rank_p;
    d.dim_coboundaries = (p == 0) ? 0 : plain_rank(delta_matrix_rows(g, p - 1));
    d.dim_cohomology = d.dim_cocycles - d.dim_coboundaries;
    return d;
}

}  // namespace liecoh::bruteforce
