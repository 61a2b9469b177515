#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

using BracketTable = std::map<std::pair<std::uint32_t, std::uint32_t>, VectorQ>;

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labeled basis. Only pairs i < j are stored; [e_j, e_i] is derived by
/// antisymmetry. Immutable after construction.
class LieAlgebra {
public:
    /// Validates index ranges, i < j, and coefficient vector lengths.
    /// Empty labels get defaults e1..en. Does NOT check Jacobi; see jacobi_check.
    static LieAlgebra create(std::size_t dim, std::vector<std::string> labels,
                             BracketTable constants);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const BracketTable& constants() const { return constants_; }

    /// [e_i, e_j] for any index order (0-based).
    VectorQ bracket_basis(std::uint32_t i, std::uint32_t j) const;
    /// Bilinear antisymmetric extension to arbitrary vectors.
    VectorQ bracket(const VectorQ& x, const VectorQ& y) const;
    /// Matrix of x -> [y, x] in the basis.
    MatrixQ ad_matrix(const VectorQ& y) const;
    MatrixQ ad_basis(std::uint32_t i) const;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    BracketTable constants_;
};

struct JacobiViolation {
    std::uint32_t i, j, k;  // 0-based basis triple
    VectorQ residual;       // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

/// Checks all C(n,3) basis triples. Empty result iff the Jacobi identity holds.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);

struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<VectorQ> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Center {x : [x, e_i] = 0 for all i}, as the nullspace of the stacked
/// ad-matrices.
Subspace center(const LieAlgebra& g);

/// Derived subalgebra C^1(g) = [g, g].
Subspace derived_subalgebra(const LieAlgebra& g);

/// Dimensions of C^0 ⊇ C^1 ⊇ ... until the sequence stabilizes (the repeat is
/// included) or reaches 0. Nilpotent iff the last entry is 0.
std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);

/// dim g − dim C^1(g), the minimal number of generators.
std::size_t first_betti(const LieAlgebra& g);

/// Lowest-index basis vectors spanning a complement of C^1(g).
std::vector<std::uint32_t> generator_complement_indices(const LieAlgebra& g);

struct CharacteristicSequence {
    std::vector<std::size_t> parts;  // non-increasing, sums to dim
    friend bool operator==(const CharacteristicSequence& a,
                           const CharacteristicSequence& b) = default;
};

/// Ordered Jordan block sizes of ad(y), recovered from the ranks of its
/// powers. Requires g nilpotent and y outside C^1(g); throws otherwise.
CharacteristicSequence characteristic_sequence_at(const LieAlgebra& g, const VectorQ& y);

struct FiliformCertificate {
    bool certified = false;  // false means "not certified", not a disproof
    VectorQ witness;         // nonempty iff certified
};

/// Searches for a vector outside C^1 whose characteristic sequence is
/// (n−1, 1). Since that value is extremal, a witness is conclusive. Candidates:
/// basis vectors outside C^1, then all ±1/0 combinations of the generator
/// complement. Requires g nilpotent.
FiliformCertificate is_filiform(const LieAlgebra& g);

}  // namespace liecoh
