#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/cohomology.hpp"
#include "liecoh/derivations.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// Parameters of one constructed algebra. Conventions (basis Y_1..Y_n):
///   L:  [Y1,Yj] = Y_{j+1}, j = 2..n-1                                (n >= 3)
///   Q:  [Y1,Yj] = Y_{j+1}, j = 2..n-2; [Yi,Y_{n+1-i}] = (-1)^{i+1} Y_n,
///       i = 2..n/2                                                   (n even)
///   A:  L-spine plus [Yi,Yj] = a_ij Y_{i+j+k-2} with a_{i,i+1} = lambda_{i-1}
///   B:  truncated spine (j <= n-2), Q-style top, A-style products
///       bounded by Y_{n-1}                                           (n even)
///   C:  truncated spine; [Yi,Y_{n+1-i}] = (-1)^{i-1} Y_n and
///       [Yi,Y_{n-2s+1-i}] = (-1)^{i+1} lambda_s Y_n                  (n = 2m+2)
///   Rh: A_{k+h+3}^k(lambda) extended by its one-dimensional torus
struct FamilySpec {
    enum class Tag { L, Q, A, B, C, Rh };
    Tag tag = Tag::L;
    std::uint32_t n = 0;  // dimension (L/Q/A/B/C)
    std::uint32_t k = 0;  // weight offset (A/B/Rh)
    std::uint32_t h = 0;  // Rh only
    std::vector<Rational> lambda;
};

/// Thrown when requested parameters define no Lie algebra (the linear
/// coefficient system is inconsistent, or the assembled table violates the
/// Jacobi identity). Carries the first violating basis triple when known.
class FamilyError : public std::runtime_error {
public:
    explicit FamilyError(const std::string& msg,
                         std::optional<std::array<std::uint32_t, 3>> triple = std::nullopt)
        : std::runtime_error(msg), triple_(triple) {}
    const std::optional<std::array<std::uint32_t, 3>>& triple() const { return triple_; }

private:
    std::optional<std::array<std::uint32_t, 3>> triple_;  // 1-based
};

/// Builds the requested algebra; validates the parameter invariants and runs
/// a full Jacobi check on the result. Throws std::invalid_argument for bad
/// parameters and FamilyError for lambda values that break Jacobi.
LieAlgebra build_family(const FamilySpec& spec);

/// Canonical one-line form, e.g. "A n=10 k=4 lambda=1,0".
std::string family_spec_to_string(const FamilySpec& spec);

/// Solution of the product-coefficient system a_ij = a_{i,j+1} + a_{i+1,j}
/// (out-of-range terms zero) with a_{i,i+1} pinned to lambda. Indices are
/// 1-based as in the bracket tables.
struct CoefficientTable {
    std::size_t lambda_count = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> entries;
    /// Per pair: integer coordinates alpha_ij with a_ij = sum alpha_ij[w] * lambda_w.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Rational>> lambda_coeffs;
};

/// A-family range: products up to Y_n. Throws FamilyError if the linear
/// system is inconsistent or underdetermined.
CoefficientTable coefficient_table(std::uint32_t n, std::uint32_t k,
                                   const std::vector<Rational>& lambda);

/// Semidirect product n ⊕ t with [t_a, X_i] = d_{a,i} X_i and commuting t.
/// The n-part keeps indices 1..dim(n); torus generators are appended.
/// Throws if some torus vector is not a derivation of n_alg.
LieAlgebra semidirect(const LieAlgebra& n_alg, const TorusBasis& t);

/// The solvable algebra A_{k+h+3}^k(lambda) ⊕ t of dimension k+h+4.
/// Requires k even >= 4, 3 <= h <= k+3, |lambda| = floor(h/2)+1, lambda_1 != 0.
LieAlgebra build_r_h(std::uint32_t k, std::uint32_t h, const std::vector<Rational>& lambda);

/// The degree-2 deformation direction phi_which on an r_h-type algebra:
/// (Y_i, Y_j) -> alpha_ij^which Y_{i+j+k-2}, zero on the torus directions.
/// `which` is 1-based and runs over the lambda parameters of the family.
Cochain deformation_cocycle(const LieAlgebra& rh, std::uint32_t k, std::uint32_t which);

}  // namespace liecoh
