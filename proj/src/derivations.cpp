#include "liecoh/derivations.hpp"

#include <algorithm>
#include <stdexcept>

#include "liecoh/sparse.hpp"

namespace liecoh {

namespace {

// Rows: one equation per (pair i<j, component r); columns: D entries in the
// degree-1 cochain flat order (coefficient of e_r in D(e_s) at s*n + r).
SparseMatrixQ derivation_system(const LieAlgebra& g) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    SparseMatrixQ sys(pairs * n, static_cast<std::size_t>(n) * n);
    std::size_t pair_idx = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j, ++pair_idx) {
            const std::size_t row0 = pair_idx * n;
            const VectorQ cij = g.bracket_basis(i, j);
            for (std::uint32_t s = 0; s < n; ++s) {
                // D[e_i,e_j] term
                if (!cij[s].is_zero())
                    for (std::uint32_t r = 0; r < n; ++r)
                        sys.add(row0 + r, s * n + r, cij[s]);
                // -[De_i, e_j] term: D(e_i) has coefficients at column i*n + s
                const VectorQ csj = g.bracket_basis(s, j);
                for (std::uint32_t r = 0; r < n; ++r)
                    if (!csj[r].is_zero())
                        sys.add(row0 + r, i * n + s, -csj[r]);
                // -[e_i, De_j] term
                const VectorQ cis = g.bracket_basis(i, s);
                for (std::uint32_t r = 0; r < n; ++r)
                    if (!cis[r].is_zero())
                        sys.add(row0 + r, j * n + s, -cis[r]);
            }
        }
    sys.normalize();
    return sys;
}

MatrixQ unflatten(const VectorQ& flat, std::size_t n) {
    MatrixQ d(n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r)
            d.at(r, s) = flat[s * n + r];
    return d;
}

VectorQ flatten(const MatrixQ& d) {
    const std::size_t n = d.rows();
    VectorQ flat(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r)
            flat[s * n + r] = d.at(r, s);
    return flat;
}

}  // namespace

DerivationSpace derivation_basis(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const auto null_vecs = nullspace_basis(derivation_system(g).to_dense());
    DerivationSpace out;
    out.ambient_dim = n;
    out.basis.reserve(null_vecs.size());
    for (const auto& v : null_vecs)
        out.basis.push_back(unflatten(v, n));
    return out;
}

DerivationSpace inner_basis(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    DerivationSpace out;
    out.ambient_dim = n;
    std::vector<VectorQ> acc;
    for (std::uint32_t i = 0; i < n; ++i) {
        const MatrixQ ad = g.ad_basis(i);
        VectorQ flat = flatten(ad);
        if (vq_is_zero(flat) || in_span(acc, flat))
            continue;
        acc.push_back(std::move(flat));
        out.basis.push_back(ad);
    }
    return out;
}

bool is_derivation(const LieAlgebra& g, const MatrixQ& d) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    if (d.rows() != n || d.cols() != n)
        return false;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            VectorQ lhs = d * g.bracket_basis(i, j);
            VectorQ di = d.col(i), dj = d.col(j);
            VectorQ ej(n), ei(n);
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            vq_axpy(lhs, Rational(-1), g.bracket(di, ej));
            vq_axpy(lhs, Rational(-1), g.bracket(ei, dj));
            if (!vq_is_zero(lhs))
                return false;
        }
    return true;
}

TorusBasis diagonal_torus(const LieAlgebra& g) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    // One constraint d_i + d_j = d_k per nonzero structure constant. Columns
    // are reversed so the RREF leaves the lowest-index coordinates free;
    // that pins the canonical weight vectors (d_1-first, then d_2, ...).
    std::size_t rows = 0;
    for (const auto& [pair, coeffs] : g.constants())
        rows += std::count_if(coeffs.begin(), coeffs.end(),
                              [](const Rational& c) { return !c.is_zero(); });
    MatrixQ sys(rows, n);
    std::size_t row = 0;
    for (const auto& [pair, coeffs] : g.constants()) {
        const auto [i, j] = pair;
        for (std::uint32_t k = 0; k < n; ++k) {
            if (coeffs[k].is_zero())
                continue;
            auto rev = [&](std::uint32_t c) { return n - 1 - c; };
            sys.at(row, rev(i)) += Rational(1);
            sys.at(row, rev(j)) += Rational(1);
            sys.at(row, rev(k)) -= Rational(1);
            ++row;
        }
    }
    auto null_vecs = nullspace_basis(sys);
    TorusBasis t;
    t.ambient_dim = n;
    for (auto& v : null_vecs) {
        std::reverse(v.begin(), v.end());
        t.weight_vectors.push_back(std::move(v));
    }
    // order by first nonzero coordinate
    std::sort(t.weight_vectors.begin(), t.weight_vectors.end(),
              [](const VectorQ& a, const VectorQ& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      const bool za = a[i].is_zero(), zb = b[i].is_zero();
                      if (za != zb)
                          return zb;
                  }
                  return false;
              });
    return t;
}

WeightSystem weight_system(const LieAlgebra& g, const TorusBasis& t) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    if (t.ambient_dim != n)
        throw std::invalid_argument("weight_system: torus/algebra dimension mismatch");
    WeightSystem ws;
    ws.torus_dim = t.dim();
    ws.weights.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        VectorQ w(t.dim());
        for (std::size_t a = 0; a < t.dim(); ++a)
            w[a] = t.weight_vectors[a][i];
        if (vq_is_zero(w))
            ws.zero_weight.push_back(i);
        ws.weights[i] = std::move(w);
    }
    ws.generators = generator_complement_indices(g);
    return ws;
}

CompletenessVerdict is_complete(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    CompletenessVerdict v;
    const Subspace z = center(g);
    v.h0 = z.dim();
    const std::size_t inner_dim = n - v.h0;
    const std::size_t der_dim = n * n - derivation_system(g).rank();
    v.h1 = der_dim - inner_dim;
    v.complete = (v.h0 == 0 && v.h1 == 0);
    if (v.h0 > 0)
        v.central_witness = z.basis.front();
    if (v.h1 > 0) {
        // first derivation-basis vector outside the inner span, in the fixed
        // flat ordering of the nullspace basis
        std::vector<VectorQ> inner_flat;
        for (const auto& d : inner_basis(g).basis)
            inner_flat.push_back(flatten(d));
        for (const auto& d : derivation_basis(g).basis) {
            if (!in_span(inner_flat, flatten(d))) {
                v.outer_witness = d;
                break;
            }
        }
    }
    return v;
}

RankCertificate rank_certificate(const LieAlgebra& g) {
    if (!is_nilpotent(g))
        throw std::invalid_argument("rank_certificate: algebra is not nilpotent");
    RankCertificate cert;
    cert.torus = diagonal_torus(g);
    cert.rank_lower_bound = cert.torus.dim();
    if (cert.rank_lower_bound > 2 && is_filiform(g).certified)
        throw std::logic_error("rank_certificate: filiform algebra with rank > 2");
    return cert;
}

}  // namespace liecoh
