#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/sparse.hpp"

namespace liecoh {

/// dim C^p(g,g) = n * C(n,p); n for p = 0, and 0 for p > n.
std::size_t cochain_dim(std::size_t n, std::size_t p);

/// Fixed bijection between basis p-cochains and flat coordinates: ascending
/// index tuples enumerated lexicographically, target basis index running
/// fastest (flat = tuple_rank * n + target). This ordering is the contract
/// for every serialized cochain and coboundary matrix.
class CochainIndex {
public:
    CochainIndex(std::size_t n, std::size_t p);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    std::size_t tuple_count() const { return tuples_.size(); }
    std::size_t size() const { return tuples_.size() * n_; }

    const std::vector<std::uint32_t>& tuple(std::size_t rank) const { return tuples_[rank]; }
    std::size_t tuple_rank(const std::vector<std::uint32_t>& t) const;
    std::size_t flat(std::size_t tuple_rank, std::uint32_t target) const {
        return tuple_rank * n_ + target;
    }

private:
    std::size_t n_, p_;
    std::vector<std::vector<std::uint32_t>> tuples_;
    std::map<std::vector<std::uint32_t>, std::size_t> rank_of_;
};

/// Alternating p-linear map g^p -> g, stored on ascending basis tuples only.
/// A 0-cochain stores a single vector (a constant function). Holds its own
/// copy of the ambient algebra; cochains are self-contained values.
class Cochain {
public:
    Cochain(LieAlgebra g, std::size_t degree) : g_(std::move(g)), degree_(degree) {}
    static Cochain from_flat(const LieAlgebra& g, std::size_t degree, const VectorQ& flat);

    const LieAlgebra& algebra() const { return g_; }
    std::size_t degree() const { return degree_; }

    /// Sets the value on an ascending tuple (the empty tuple for p = 0).
    void set(std::vector<std::uint32_t> tuple, VectorQ value);

    /// Value on an arbitrary basis tuple: sorted with sign, zero on repeats.
    VectorQ value_on(std::vector<std::uint32_t> tuple) const;

    VectorQ flat() const;
    bool is_zero() const;
    const std::map<std::vector<std::uint32_t>, VectorQ>& entries() const { return entries_; }

    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    LieAlgebra g_;
    std::size_t degree_;
    std::map<std::vector<std::uint32_t>, VectorQ> entries_;
};

/// Matrix of the Chevalley–Eilenberg coboundary δ : C^p -> C^{p+1} in
/// CochainIndex coordinates (adjoint coefficients).
SparseMatrixQ delta_sparse(const LieAlgebra& g, std::size_t p);
MatrixQ delta_matrix(const LieAlgebra& g, std::size_t p);

/// δ applied to a cochain, evaluated directly from the defining formula.
/// Equals delta_matrix acting on flattened coordinates.
Cochain apply_delta(const Cochain& c);

bool is_cocycle(const Cochain& c);

/// Degree p−1 preimage under δ when one exists. For p = 0 the coboundary
/// space is {0} by convention and there is no preimage degree; returns nullopt.
std::optional<Cochain> is_coboundary(const Cochain& c);

struct CohomologyDims {
    std::size_t p = 0;
    std::size_t dim_cochains = 0;      // dim C^p
    std::size_t dim_cocycles = 0;      // dim Z^p = dim C^p − rank δ_p
    std::size_t dim_coboundaries = 0;  // dim B^p = rank δ_{p−1} (0 for p = 0)
    std::size_t dim_cohomology = 0;    // dim H^p = dim Z^p − dim B^p
};

CohomologyDims cohomology_dims(const LieAlgebra& g, std::size_t p);

}  // namespace liecoh
