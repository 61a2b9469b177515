#include <doctest.h>

#include <random>

#include "liecoh/matrix.hpp"
#include "liecoh/sparse.hpp"

using namespace liecoh;

namespace {

Rational q(long n) {
    return Rational(n);
}

MatrixQ jordan_block(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m.at(i, i + 1) = q(1);
    return m;
}

MatrixQ random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

std::size_t dense_rref_rank(const MatrixQ& m) {
    MatrixQ copy = m;
    return rref_in_place(copy).size();
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(MatrixQ::identity(3)) == 3);
    CHECK(rank(jordan_block(4)) == 3);
    CHECK(rank(MatrixQ{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}}) == 1);
    CHECK(rank(MatrixQ(2, 2)) == 0);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace_basis(MatrixQ::identity(3)).empty());
    CHECK(nullspace_basis(MatrixQ(2, 2)).size() == 2);
    const auto basis = nullspace_basis(MatrixQ{{q(1), q(1)}});
    REQUIRE(basis.size() == 1);
    // proportional to (1, -1)
    CHECK(basis[0][0] == -basis[0][1]);
    CHECK(!basis[0][0].is_zero());
}

TEST_CASE("solve_affine basics") {
    const auto sol1 = solve_affine(MatrixQ::identity(2), {q(3), q(5)});
    REQUIRE(sol1.has_value());
    CHECK(sol1->particular == VectorQ{q(3), q(5)});
    CHECK(sol1->homogeneous.empty());

    const auto sol2 = solve_affine(MatrixQ{{q(1), q(1)}}, {q(0)});
    REQUIRE(sol2.has_value());
    CHECK(vq_is_zero(sol2->particular));
    REQUIRE(sol2->homogeneous.size() == 1);
    CHECK(sol2->homogeneous[0][0] == -sol2->homogeneous[0][1]);

    CHECK(!solve_affine(MatrixQ{{q(1)}, {q(1)}}, {q(0), q(1)}).has_value());
    CHECK_THROWS_AS(solve_affine(MatrixQ::identity(2), {q(1)}), std::invalid_argument);
}

TEST_CASE("power rank sequences") {
    CHECK(power_rank_sequence(jordan_block(4), 4) == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(power_rank_sequence(MatrixQ(3, 3), 2) == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(power_rank_sequence(MatrixQ(2, 3), 2), std::invalid_argument);

    // ad(Y1) on L5 worked out by hand: Y2->Y3->Y4->Y5->0
    MatrixQ ad(5, 5);
    ad.at(2, 1) = q(1);
    ad.at(3, 2) = q(1);
    ad.at(4, 3) = q(1);
    CHECK(power_rank_sequence(ad, 5) == std::vector<std::size_t>{3, 2, 1, 0, 0});
}

TEST_CASE("rank engines agree and nullity is complementary") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const MatrixQ m = random_matrix(rng, rows, cols);
        const std::size_t rk = rank(m);
        CHECK(rk == dense_rref_rank(m));
        CHECK(rk + nullspace_basis(m).size() == cols);
        // every nullspace vector is annihilated exactly
        for (const auto& v : nullspace_basis(m))
            CHECK(vq_is_zero(m * v));
    }
}

TEST_CASE("solve_affine returns exact solutions on random systems") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const MatrixQ m = random_matrix(rng, rows, cols);
        const VectorQ x0 = random_matrix(rng, cols, 1).col(0);
        const VectorQ b = m * x0;  // consistent by construction
        const auto sol = solve_affine(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * sol->particular == b);
        CHECK(sol->homogeneous.size() == cols - rank(m));
    }
}

TEST_CASE("sparse product and dense round-trip") {
    std::mt19937 rng(5);
    const MatrixQ a = random_matrix(rng, 4, 3), b = random_matrix(rng, 3, 5);
    const auto sa = SparseMatrixQ::from_dense(a), sb = SparseMatrixQ::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK(SparseMatrixQ::from_dense(a).to_dense() == a);
    CHECK(sa.rank_with_column(a.col(0)) == rank(a));  // dependent extra column
}

TEST_CASE("power ranks never increase") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        const MatrixQ m = random_matrix(rng, 4, 4);
        const auto seq = power_rank_sequence(m, 4);
        for (std::size_t k = 1; k < seq.size(); ++k)
            CHECK(seq[k] <= seq[k - 1]);
    }
}
