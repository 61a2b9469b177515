#include "liecoh/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

LieAlgebra LieAlgebra::create(std::size_t dim, std::vector<std::string> labels,
                              BracketTable constants) {
    if (labels.empty()) {
        labels.reserve(dim);
        for (std::size_t i = 1; i <= dim; ++i)
            labels.push_back("e" + std::to_string(i));
    }
    if (labels.size() != dim)
        throw std::invalid_argument("LieAlgebra: label count does not match dimension");
    for (auto it = constants.begin(); it != constants.end();) {
        const auto [i, j] = it->first;
        if (i >= j)
            throw std::invalid_argument("LieAlgebra: bracket pairs must satisfy i < j");
        if (j >= dim)
            throw std::invalid_argument("LieAlgebra: bracket index out of range");
        if (it->second.size() != dim)
            throw std::invalid_argument("LieAlgebra: coefficient vector length mismatch");
        it = vq_is_zero(it->second) ? constants.erase(it) : std::next(it);
    }
    LieAlgebra g;
    g.dim_ = dim;
    g.labels_ = std::move(labels);
    g.constants_ = std::move(constants);
    return g;
}

VectorQ LieAlgebra::bracket_basis(std::uint32_t i, std::uint32_t j) const {
    if (i >= dim_ || j >= dim_)
        throw std::invalid_argument("bracket_basis: index out of range");
    if (i == j)
        return VectorQ(dim_);
    const bool flip = i > j;
    auto it = constants_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == constants_.end())
        return VectorQ(dim_);
    return flip ? vq_scaled(it->second, Rational(-1)) : it->second;
}

VectorQ LieAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("bracket: vector length mismatch");
    VectorQ r(dim_);
    for (const auto& [pair, coeffs] : constants_) {
        const auto [i, j] = pair;
        const Rational c = x[i] * y[j] - x[j] * y[i];
        if (!c.is_zero())
            vq_axpy(r, c, coeffs);
    }
    return r;
}

MatrixQ LieAlgebra::ad_matrix(const VectorQ& y) const {
    if (y.size() != dim_)
        throw std::invalid_argument("ad_matrix: vector length mismatch");
    MatrixQ m(dim_, dim_);
    for (std::uint32_t j = 0; j < dim_; ++j) {
        VectorQ ej(dim_);
        ej[j] = Rational(1);
        const VectorQ img = bracket(y, ej);
        for (std::uint32_t i = 0; i < dim_; ++i)
            m.at(i, j) = img[i];
    }
    return m;
}

MatrixQ LieAlgebra::ad_basis(std::uint32_t i) const {
    VectorQ e(dim_);
    e[i] = Rational(1);
    return ad_matrix(e);
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
    std::vector<JacobiViolation> violations;
    const std::uint32_t n = static_cast<std::uint32_t>(g.dim());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k) {
                VectorQ ei(n), ej(n), ek(n);
                ei[i] = ej[j] = ek[k] = Rational(1);
                VectorQ res = g.bracket(g.bracket_basis(i, j), ek);
                vq_axpy(res, Rational(1), g.bracket(g.bracket_basis(j, k), ei));
                vq_axpy(res, Rational(1), g.bracket(g.bracket_basis(k, i), ej));
                if (!vq_is_zero(res))
                    violations.push_back({i, j, k, std::move(res)});
            }
    return violations;
}

Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // Row (i, r): coefficient of e_r in [x, e_i] as a function of x.
    MatrixQ sys(n * n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t s = 0; s < n; ++s) {
            const VectorQ br = g.bracket_basis(s, i);
            for (std::uint32_t r = 0; r < n; ++r)
                sys.at(i * n + r, s) = br[r];
        }
    return Subspace{n, nullspace_basis(sys)};
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    std::vector<VectorQ> spanning;
    for (const auto& [pair, coeffs] : g.constants())
        spanning.push_back(coeffs);
    return Subspace{g.dim(), span_basis(spanning, g.dim())};
}

std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::size_t> dims{n};
    std::vector<VectorQ> current;  // basis of C^k
    for (std::uint32_t i = 0; i < n; ++i) {
        VectorQ e(n);
        e[i] = Rational(1);
        current.push_back(std::move(e));
    }
    for (;;) {
        std::vector<VectorQ> next_span;
        for (std::uint32_t i = 0; i < n; ++i) {
            VectorQ ei(n);
            ei[i] = Rational(1);
            for (const auto& v : current) {
                VectorQ br = g.bracket(ei, v);
                if (!vq_is_zero(br))
                    next_span.push_back(std::move(br));
            }
        }
        current = span_basis(next_span, n);
        dims.push_back(current.size());
        if (current.empty() || dims[dims.size() - 1] == dims[dims.size() - 2])
            break;
    }
    return dims;
}

bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series_dims(g).back() == 0;
}

std::size_t first_betti(const LieAlgebra& g) {
    return g.dim() - derived_subalgebra(g).dim();
}

std::vector<std::uint32_t> generator_complement_indices(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::uint32_t> gens;
    std::vector<VectorQ> acc = derived_subalgebra(g).basis;
    for (std::uint32_t i = 0; i < n && acc.size() < n; ++i) {
        VectorQ e(n);
        e[i] = Rational(1);
        if (!in_span(acc, e)) {
            acc.push_back(std::move(e));
            gens.push_back(i);
        }
    }
    return gens;
}

CharacteristicSequence characteristic_sequence_at(const LieAlgebra& g, const VectorQ& y) {
    const std::size_t n = g.dim();
    if (y.size() != n)
        throw std::invalid_argument("characteristic_sequence_at: vector length mismatch");
    if (!is_nilpotent(g))
        throw std::invalid_argument("characteristic_sequence_at: algebra is not nilpotent");
    const Subspace c1 = derived_subalgebra(g);
    if (in_span(c1.basis, y))
        throw std::invalid_argument("characteristic_sequence_at: vector lies in C^1");

    const MatrixQ ad = g.ad_matrix(y);
    // rank(ad^k) for k = 0..; nilpotency of ad(y) follows from g nilpotent,
    // but verify instead of assuming.
    std::vector<std::size_t> ranks{n};
    MatrixQ cur = ad;
    while (ranks.back() != 0) {
        ranks.push_back(rank(cur));
        if (ranks.size() > n + 1)
            throw std::invalid_argument("characteristic_sequence_at: ad(y) is not nilpotent");
        cur = cur * ad;
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]; emit sizes non-increasing
    std::vector<std::size_t> parts;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_k1 = (k < ranks.size() - 1) ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c)
            parts.push_back(k);
    }
    return CharacteristicSequence{std::move(parts)};
}

FiliformCertificate is_filiform(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    if (!is_nilpotent(g))
        throw std::invalid_argument("is_filiform: algebra is not nilpotent");
    const Subspace c1 = derived_subalgebra(g);
    const CharacteristicSequence target{{n - 1, 1}};

    auto try_vector = [&](const VectorQ& y) -> bool {
        if (in_span(c1.basis, y))
            return false;
        return characteristic_sequence_at(g, y) == target;
    };

    const std::vector<std::uint32_t> gens = generator_complement_indices(g);

    // every basis vector outside C^1 first, then mixed ±1/0 combinations of
    // the generator complement (first nonzero coefficient fixed to +1; sign
    // flips give the same Jordan type)
    for (std::uint32_t i = 0; i < n; ++i) {
        VectorQ e(n);
        e[i] = Rational(1);
        if (!in_span(c1.basis, e))
            if (try_vector(e))
                return {true, e};
    }
    const std::size_t b1 = gens.size();
    std::vector<int> coeff(b1, 0);
    for (;;) {
        // next tuple over {-1,0,1}, counting in base 3
        std::size_t pos = 0;
        while (pos < b1 && coeff[pos] == 1)
            coeff[pos++] = -1;
        if (pos == b1)
            break;
        ++coeff[pos];
        int nonzero = 0, first = 0;
        for (std::size_t t = 0; t < b1; ++t)
            if (coeff[t] != 0) {
                ++nonzero;
                if (!first)
                    first = coeff[t];
            }
        if (nonzero < 2 || first != 1)
            continue;
        VectorQ y(n);
        for (std::size_t t = 0; t < b1; ++t)
            if (coeff[t] != 0)
                y[gens[t]] = Rational(coeff[t]);
        if (try_vector(y))
            return {true, y};
    }
    return {false, {}};
}

}  // namespace liecoh
