#pragma once

#include <cstddef>

#include "liecoh/lie_algebra.hpp"

namespace liecoh::bruteforce {

/// Reference cohomology dimensions computed by a deliberately naive second
/// path: basis cochains are expanded to full tensors on all ordered index
/// tuples (antisymmetry enforced by explicit permutation signs), the
/// coboundary is evaluated term by term from its defining formula, and ranks
/// come from a plain dense elimination. Shares nothing with the CochainIndex
/// machinery or the sparse engine; intended as an oracle for small dimensions.
struct Dims {
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
};

Dims cohomology_dims(const LieAlgebra& g, std::size_t p);

}  // namespace liecoh::bruteforce
