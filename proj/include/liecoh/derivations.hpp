#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

struct DerivationSpace {
    std::size_t ambient_dim = 0;
    std::vector<MatrixQ> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Basis of Der(g): nullspace of D[e_i,e_j] − [De_i,e_j] − [e_i,De_j] = 0 over
/// all pairs i < j. Unknowns are ordered argument-major (entry (r, j) of D at
/// flat index j*n + r), matching the degree-1 cochain flat ordering.
DerivationSpace derivation_basis(const LieAlgebra& g);

/// Basis of {ad X}: the linearly independent ad(e_i), lowest indices first.
DerivationSpace inner_basis(const LieAlgebra& g);

/// True iff d[x,y] = [dx,y] + [x,dy] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const MatrixQ& d);

struct TorusBasis {
    std::size_t ambient_dim = 0;
    /// Diagonals of commuting diagonal derivations, one vector per generator.
    std::vector<VectorQ> weight_vectors;
    std::size_t dim() const { return weight_vectors.size(); }
};

/// Derivations diagonal in the given basis: solutions of d_k = d_i + d_j over
/// every nonzero structure constant (i,j -> k). For the algebras built by the
/// family constructors the standard basis diagonalizes a maximal torus, so
/// this is the torus itself; for arbitrary input it is a lower bound.
/// Canonical basis: free coordinates at the lowest indices.
TorusBasis diagonal_torus(const LieAlgebra& g);

struct WeightSystem {
    std::size_t torus_dim = 0;
    /// weights[i] = eigenvalue tuple of e_i under the torus basis.
    std::vector<VectorQ> weights;
    /// Eigen-generators: lowest-index basis vectors spanning a complement of C^1.
    std::vector<std::uint32_t> generators;
    /// Basis vectors with identically zero weight.
    std::vector<std::uint32_t> zero_weight;
};

WeightSystem weight_system(const LieAlgebra& g, const TorusBasis& t);

struct CompletenessVerdict {
    std::size_t h0 = 0;  // dim H^0 = dim center
    std::size_t h1 = 0;  // dim H^1 = dim Der − dim Inner
    bool complete = false;
    /// Present iff h1 > 0: first derivation-basis vector outside the inner span.
    std::optional<MatrixQ> outer_witness;
    /// Present iff h0 > 0: first central basis vector.
    std::optional<VectorQ> central_witness;
};

CompletenessVerdict is_complete(const LieAlgebra& g);

struct RankCertificate {
    std::size_t rank_lower_bound = 0;
    TorusBasis torus;
};

/// Diagonal torus dimension, reported as a lower bound for the rank r(g).
/// Requires g nilpotent; for filiform inputs the value never exceeds 2.
RankCertificate rank_certificate(const LieAlgebra& g);

}  // namespace liecoh
