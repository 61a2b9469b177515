#include <doctest.h>

#include <random>

#include "liecoh/families.hpp"
#include "liecoh/lie_algebra.hpp"

using namespace liecoh;

namespace {

Rational q(long n) {
    return Rational(n);
}

LieAlgebra heisenberg() {
    BracketTable t;
    VectorQ v(3);
    v[2] = q(1);
    t[{0, 1}] = v;
    return LieAlgebra::create(3, {}, std::move(t));
}

LieAlgebra r2() {
    BracketTable t;
    VectorQ v(2);
    v[1] = q(1);
    t[{0, 1}] = v;
    return LieAlgebra::create(2, {}, std::move(t));
}

LieAlgebra abelian(std::size_t n) {
    return LieAlgebra::create(n, {}, {});
}

LieAlgebra family(FamilySpec::Tag tag, std::uint32_t n) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    return build_family(s);
}

VectorQ basis_vec(std::size_t n, std::size_t i) {
    VectorQ v(n);
    v[i] = q(1);
    return v;
}

VectorQ random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-3, 3);
    VectorQ v(n);
    for (auto& x : v)
        x = q(d(rng));
    return v;
}

}  // namespace

TEST_CASE("construction validates the table") {
    BracketTable bad;
    bad[{1, 1}] = VectorQ(3);
    CHECK_THROWS_AS(LieAlgebra::create(3, {}, bad), std::invalid_argument);
    BracketTable bad2;
    bad2[{0, 5}] = VectorQ(3);
    CHECK_THROWS_AS(LieAlgebra::create(3, {}, bad2), std::invalid_argument);
    BracketTable bad3;
    bad3[{0, 1}] = VectorQ(2);
    CHECK_THROWS_AS(LieAlgebra::create(3, {}, bad3), std::invalid_argument);
}

TEST_CASE("bracket evaluation") {
    const LieAlgebra h = heisenberg();
    CHECK(h.bracket(basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));
    CHECK(h.bracket_basis(1, 0) == vq_scaled(basis_vec(3, 2), q(-1)));

    const LieAlgebra l6 = family(FamilySpec::Tag::L, 6);
    CHECK(l6.bracket_basis(1, 0) == vq_scaled(basis_vec(6, 2), q(-1)));  // [Y2,Y1] = -Y3

    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const VectorQ x = random_vec(rng, 6), y = random_vec(rng, 6);
        CHECK(vq_is_zero(l6.bracket(x, x)));
        VectorQ anti = l6.bracket(x, y);
        vq_axpy(anti, q(1), l6.bracket(y, x));
        CHECK(vq_is_zero(anti));
        // bilinearity in the first slot
        VectorQ ax = vq_scaled(x, q(5));
        VectorQ lhs = l6.bracket(ax, y);
        vq_axpy(lhs, q(-5), l6.bracket(x, y));
        CHECK(vq_is_zero(lhs));
    }
}

TEST_CASE("jacobi check") {
    CHECK(jacobi_check(abelian(4)).empty());
    CHECK(jacobi_check(family(FamilySpec::Tag::L, 10)).empty());

    // [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e2 breaks Jacobi on (e1,e2,e3)
    BracketTable t;
    VectorQ a(4), b(4), c(4);
    a[2] = q(1);
    b[3] = q(1);
    c[1] = q(1);
    t[{0, 1}] = a;
    t[{0, 2}] = b;
    t[{1, 2}] = c;
    const LieAlgebra bad = LieAlgebra::create(4, {}, std::move(t));
    const auto violations = jacobi_check(bad);
    REQUIRE(!violations.empty());
    CHECK(violations.front().i == 0);
    CHECK(violations.front().j == 1);
    CHECK(violations.front().k == 2);
    // residual is [[e2,e3],e1] = [e2,e1] = -e3
    CHECK(violations.front().residual == vq_scaled(basis_vec(4, 2), q(-1)));
}

TEST_CASE("center") {
    CHECK(center(abelian(2)).dim() == 2);
    const auto z = center(family(FamilySpec::Tag::L, 4));
    REQUIRE(z.dim() == 1);
    CHECK(z.basis[0] == basis_vec(4, 3));  // span{Y4}
    CHECK(center(r2()).dim() == 0);
}

TEST_CASE("lower central series") {
    CHECK(lower_central_series_dims(abelian(3)) == std::vector<std::size_t>{3, 0});
    CHECK(lower_central_series_dims(family(FamilySpec::Tag::L, 5)) ==
          std::vector<std::size_t>{5, 3, 2, 1, 0});
    CHECK(lower_central_series_dims(r2()) == std::vector<std::size_t>{2, 1, 1});
    CHECK(is_nilpotent(family(FamilySpec::Tag::L, 5)));
    CHECK(!is_nilpotent(r2()));
}

TEST_CASE("first betti number") {
    CHECK(first_betti(abelian(4)) == 4);
    CHECK(first_betti(family(FamilySpec::Tag::L, 7)) == 2);
    const LieAlgebra q6 = family(FamilySpec::Tag::Q, 6);
    CHECK(derived_subalgebra(q6).dim() == 4);  // span{Y3..Y6}
    CHECK(first_betti(q6) == 2);
}

TEST_CASE("ad matrices") {
    const LieAlgebra l4 = family(FamilySpec::Tag::L, 4);
    CHECK(l4.ad_matrix(basis_vec(4, 3)).is_zero());  // Y4 central
    const MatrixQ ad1 = l4.ad_basis(0);
    CHECK(ad1.col(1) == basis_vec(4, 2));  // Y2 -> Y3
    CHECK(ad1.col(2) == basis_vec(4, 3));  // Y3 -> Y4
    CHECK(vq_is_zero(ad1.col(0)));
    CHECK(vq_is_zero(ad1.col(3)));
    CHECK(rank(heisenberg().ad_basis(0)) == 1);

    // ad is a homomorphism: ad[x,y] = ad x ad y - ad y ad x
    const LieAlgebra q6 = family(FamilySpec::Tag::Q, 6);
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        const VectorQ x = random_vec(rng, 6), y = random_vec(rng, 6);
        const MatrixQ lhs = q6.ad_matrix(q6.bracket(x, y));
        const MatrixQ ax = q6.ad_matrix(x), ay = q6.ad_matrix(y);
        const MatrixQ rhs = ax * ay;
        const MatrixQ rhs2 = ay * ax;
        MatrixQ diff(6, 6);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                diff.at(r, c) = lhs.at(r, c) - rhs.at(r, c) + rhs2.at(r, c);
        CHECK(diff.is_zero());
    }
}

TEST_CASE("characteristic sequences") {
    const LieAlgebra l6 = family(FamilySpec::Tag::L, 6);
    CHECK(characteristic_sequence_at(l6, basis_vec(6, 0)).parts ==
          std::vector<std::size_t>{5, 1});
    CHECK(characteristic_sequence_at(abelian(3), basis_vec(3, 0)).parts ==
          std::vector<std::size_t>{1, 1, 1});
    const LieAlgebra l5 = family(FamilySpec::Tag::L, 5);
    CHECK(characteristic_sequence_at(l5, basis_vec(5, 1)).parts ==
          std::vector<std::size_t>{2, 1, 1, 1});
    // Y3 lies in C^1
    CHECK_THROWS_AS(characteristic_sequence_at(l5, basis_vec(5, 2)), std::invalid_argument);
    CHECK_THROWS_AS(characteristic_sequence_at(r2(), basis_vec(2, 0)), std::invalid_argument);
}

TEST_CASE("filiform certification") {
    const auto l7 = is_filiform(family(FamilySpec::Tag::L, 7));
    CHECK(l7.certified);
    CHECK(l7.witness == basis_vec(7, 0));  // Y1

    CHECK(!is_filiform(abelian(4)).certified);

    const auto heis = is_filiform(heisenberg());
    CHECK(heis.certified);  // c = (2,1) = (n-1,1) at n = 3

    // Q6 needs a combination vector: ad(Y1) alone has type (4,1,1)
    const LieAlgebra q6 = family(FamilySpec::Tag::Q, 6);
    CHECK(characteristic_sequence_at(q6, basis_vec(6, 0)).parts ==
          std::vector<std::size_t>{4, 1, 1});
    const auto cert = is_filiform(q6);
    CHECK(cert.certified);
    CHECK(characteristic_sequence_at(q6, cert.witness).parts == std::vector<std::size_t>{5, 1});
}

TEST_CASE("characteristic sequence structure on random vectors") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> d(-2, 2);
    for (const LieAlgebra& g : {family(FamilySpec::Tag::L, 6), family(FamilySpec::Tag::Q, 8)}) {
        const std::size_t n = g.dim();
        const Subspace c1 = derived_subalgebra(g);
        int tried = 0;
        while (tried < 10) {
            VectorQ y(n);
            y[0] = q(d(rng));
            y[1] = q(d(rng));  // generators live in the first two coordinates
            if (in_span(c1.basis, y))
                continue;
            ++tried;
            const auto seq = characteristic_sequence_at(g, y).parts;
            std::size_t sum = 0;
            for (std::size_t p = 0; p < seq.size(); ++p) {
                sum += seq[p];
                if (p)
                    CHECK(seq[p] <= seq[p - 1]);
            }
            CHECK(sum == n);
            CHECK(seq.back() == 1);  // y is an eigenvector of its own ad
        }
    }
}

TEST_CASE("generator complement") {
    CHECK(generator_complement_indices(family(FamilySpec::Tag::L, 6)) ==
          std::vector<std::uint32_t>{0, 1});
    CHECK(generator_complement_indices(abelian(3)) == std::vector<std::uint32_t>{0, 1, 2});
}
