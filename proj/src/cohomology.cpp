#include "liecoh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::size_t cochain_dim(std::size_t n, std::size_t p) {
    return n * binom(n, p);
}

CochainIndex::CochainIndex(std::size_t n, std::size_t p) : n_(n), p_(p) {
    if (p > n)
        return;  // empty space
    std::vector<std::uint32_t> t(p);
    for (std::size_t i = 0; i < p; ++i)
        t[i] = static_cast<std::uint32_t>(i);
    for (;;) {
        rank_of_[t] = tuples_.size();
        tuples_.push_back(t);
        if (p == 0)
            break;
        // next ascending tuple in lexicographic order
        std::size_t i = p;
        while (i > 0 && t[i - 1] == n - p + i - 1)
            --i;
        if (i == 0)
            break;
        ++t[i - 1];
        for (std::size_t j = i; j < p; ++j)
            t[j] = t[j - 1] + 1;
    }
}

std::size_t CochainIndex::tuple_rank(const std::vector<std::uint32_t>& t) const {
    auto it = rank_of_.find(t);
    if (it == rank_of_.end())
        throw std::invalid_argument("CochainIndex: tuple not in index");
    return it->second;
}

Cochain Cochain::from_flat(const LieAlgebra& g, std::size_t degree, const VectorQ& flat) {
    const CochainIndex idx(g.dim(), degree);
    if (flat.size() != idx.size())
        throw std::invalid_argument("Cochain::from_flat: coordinate length mismatch");
    Cochain c(g, degree);
    for (std::size_t t = 0; t < idx.tuple_count(); ++t) {
        VectorQ v(flat.begin() + t * g.dim(), flat.begin() + (t + 1) * g.dim());
        if (!vq_is_zero(v))
            c.entries_[idx.tuple(t)] = std::move(v);
    }
    return c;
}

void Cochain::set(std::vector<std::uint32_t> tuple, VectorQ value) {
    if (tuple.size() != degree_)
        throw std::invalid_argument("Cochain::set: tuple size does not match degree");
    if (!std::is_sorted(tuple.begin(), tuple.end()) ||
        std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end())
        throw std::invalid_argument("Cochain::set: tuple must be strictly ascending");
    for (auto i : tuple)
        if (i >= g_.dim())
            throw std::invalid_argument("Cochain::set: index out of range");
    if (value.size() != g_.dim())
        throw std::invalid_argument("Cochain::set: value length mismatch");
    if (vq_is_zero(value))
        entries_.erase(tuple);
    else
        entries_[std::move(tuple)] = std::move(value);
}

VectorQ Cochain::value_on(std::vector<std::uint32_t> tuple) const {
    if (tuple.size() != degree_)
        throw std::invalid_argument("Cochain::value_on: tuple size does not match degree");
    // sort with parity; repeated index kills the alternating value
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j])
                return VectorQ(g_.dim());
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    auto it = entries_.find(tuple);
    if (it == entries_.end())
        return VectorQ(g_.dim());
    return sign == 1 ? it->second : vq_scaled(it->second, Rational(-1));
}

VectorQ Cochain::flat() const {
    const CochainIndex idx(g_.dim(), degree_);
    VectorQ out(idx.size());
    for (const auto& [tuple, value] : entries_) {
        const std::size_t t = idx.tuple_rank(tuple);
        for (std::uint32_t m = 0; m < g_.dim(); ++m)
            out[idx.flat(t, m)] = value[m];
    }
    return out;
}

bool Cochain::is_zero() const {
    return entries_.empty();
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.entries_ == b.entries_;
}

// delta(Phi)(X_1..X_{p+1}) =
//     sum_s (-1)^{s+1} [X_s, Phi(.. X_s^ ..)]
//   + sum_{s<t} (-1)^{s+t} Phi([X_s,X_t], .. X_s^ .. X_t^ ..)
SparseMatrixQ delta_sparse(const LieAlgebra& g, std::size_t p) {
    const std::size_t n = g.dim();
    const CochainIndex rows(n, p + 1), cols(n, p);
    SparseMatrixQ m(rows.size(), cols.size());
    if (rows.size() == 0 || cols.size() == 0)
        return m;

    for (std::size_t jr = 0; jr < rows.tuple_count(); ++jr) {
        const auto& J = rows.tuple(jr);
        // first sum: drop position s, bracket with the target of the column
        for (std::size_t s = 0; s < J.size(); ++s) {
            std::vector<std::uint32_t> K;
            K.reserve(p);
            for (std::size_t q = 0; q < J.size(); ++q)
                if (q != s)
                    K.push_back(J[q]);
            const std::size_t kr = cols.tuple_rank(K);
            const Rational sgn((s % 2 == 0) ? 1 : -1);
            for (std::uint32_t t = 0; t < n; ++t) {
                const VectorQ br = g.bracket_basis(J[s], t);
                for (std::uint32_t r = 0; r < n; ++r)
                    if (!br[r].is_zero())
                        m.add(rows.flat(jr, r), static_cast<std::uint32_t>(cols.flat(kr, t)),
                              sgn * br[r]);
            }
        }
        // second sum: bracket two arguments, feed the result back in
        for (std::size_t s = 0; s + 1 < J.size(); ++s)
            for (std::size_t t = s + 1; t < J.size(); ++t) {
                const VectorQ br = g.bracket_basis(J[s], J[t]);
                if (vq_is_zero(br))
                    continue;
                std::vector<std::uint32_t> rest;
                rest.reserve(p ? p - 1 : 0);
                for (std::size_t q = 0; q < J.size(); ++q)
                    if (q != s && q != t)
                        rest.push_back(J[q]);
                // 1-based sign (-1)^{s+t} equals (-1)^{s0+t0} in 0-based positions
                const Rational sgn(((s + t) % 2 == 0) ? 1 : -1);
                for (std::uint32_t x = 0; x < n; ++x) {
                    if (br[x].is_zero())
                        continue;
                    // insert x into the ascending rest with parity
                    std::size_t pos = 0;
                    while (pos < rest.size() && rest[pos] < x)
                        ++pos;
                    if (pos < rest.size() && rest[pos] == x)
                        continue;
                    std::vector<std::uint32_t> K = rest;
                    K.insert(K.begin() + pos, x);
                    const std::size_t kr = cols.tuple_rank(K);
                    const Rational coeff =
                        (pos % 2 == 0) ? sgn * br[x] : -(sgn * br[x]);
                    for (std::uint32_t r = 0; r < n; ++r)
                        m.add(rows.flat(jr, r), static_cast<std::uint32_t>(cols.flat(kr, r)),
                              coeff);
                }
            }
    }
    m.normalize();
    return m;
}

MatrixQ delta_matrix(const LieAlgebra& g, std::size_t p) {
    return delta_sparse(g, p).to_dense();
}

Cochain apply_delta(const Cochain& c) {
    const LieAlgebra& g = c.algebra();
    const std::size_t n = g.dim();
    const std::size_t p = c.degree();
    Cochain out(g, p + 1);
    const CochainIndex rows(n, p + 1);
    for (std::size_t jr = 0; jr < rows.tuple_count(); ++jr) {
        const auto& J = rows.tuple(jr);
        VectorQ value(n);
        for (std::size_t s = 0; s < J.size(); ++s) {
            std::vector<std::uint32_t> K;
            for (std::size_t q = 0; q < J.size(); ++q)
                if (q != s)
                    K.push_back(J[q]);
            VectorQ ejs(n);
            ejs[J[s]] = Rational(1);
            const VectorQ inner = c.value_on(K);
            if (!vq_is_zero(inner))
                vq_axpy(value, Rational((s % 2 == 0) ? 1 : -1), g.bracket(ejs, inner));
        }
        for (std::size_t s = 0; s + 1 < J.size(); ++s)
            for (std::size_t t = s + 1; t < J.size(); ++t) {
                const VectorQ br = g.bracket_basis(J[s], J[t]);
                if (vq_is_zero(br))
                    continue;
                std::vector<std::uint32_t> rest;
                for (std::size_t q = 0; q < J.size(); ++q)
                    if (q != s && q != t)
                        rest.push_back(J[q]);
                const Rational sgn(((s + t) % 2 == 0) ? 1 : -1);
                for (std::uint32_t x = 0; x < n; ++x) {
                    if (br[x].is_zero())
                        continue;
                    std::vector<std::uint32_t> arg{x};
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    const VectorQ inner = c.value_on(arg);
                    if (!vq_is_zero(inner))
                        vq_axpy(value, sgn * br[x], inner);
                }
            }
        if (!vq_is_zero(value))
            out.set(J, std::move(value));
    }
    return out;
}

bool is_cocycle(const Cochain& c) {
    return apply_delta(c).is_zero();
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
    const std::size_t p = c.degree();
    if (p == 0)
        return std::nullopt;  // B^0 = {0}; no degree −1 preimage exists
    const LieAlgebra& g = c.algebra();
    const VectorQ target = c.flat();
    const SparseMatrixQ delta = delta_sparse(g, p - 1);
    // membership first (cheap, sparse); extract a preimage only when it exists
    if (delta.rank_with_column(target) != delta.rank())
        return std::nullopt;
    const auto sol = solve_affine(delta.to_dense(), target);
    if (!sol)
        return std::nullopt;  // unreachable given the rank test
    return Cochain::from_flat(g, p - 1, sol->particular);
}

CohomologyDims cohomology_dims(const LieAlgebra& g, std::size_t p) {
    CohomologyDims d;
    d.p = p;
    d.dim_cochains = cochain_dim(g.dim(), p);
    d.dim_cocycles = d.dim_cochains - delta_sparse(g, p).rank();
    d.dim_coboundaries = (p == 0) ? 0 : delta_sparse(g, p - 1).rank();
    d.dim_cohomology = d.dim_cocycles - d.dim_coboundaries;
    return d;
}

}  // namespace liecoh
