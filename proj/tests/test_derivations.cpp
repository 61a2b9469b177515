#include <doctest.h>

#include "liecoh/cohomology.hpp"
#include "liecoh/derivations.hpp"
#include "liecoh/families.hpp"

using namespace liecoh;

namespace {

Rational q(long n) {
    return Rational(n);
}

LieAlgebra abelian(std::size_t n) {
    return LieAlgebra::create(n, {}, {});
}

LieAlgebra r2() {
    BracketTable t;
    VectorQ v(2);
    v[1] = q(1);
    t[{0, 1}] = v;
    return LieAlgebra::create(2, {}, std::move(t));
}

LieAlgebra heisenberg() {
    BracketTable t;
    VectorQ v(3);
    v[2] = q(1);
    t[{0, 1}] = v;
    return LieAlgebra::create(3, {}, std::move(t));
}

LieAlgebra family(FamilySpec::Tag tag, std::uint32_t n, std::uint32_t k = 0,
                  std::vector<Rational> lambda = {}) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    s.k = k;
    s.lambda = std::move(lambda);
    return build_family(s);
}

VectorQ rationals(std::initializer_list<long> xs) {
    VectorQ v;
    for (long x : xs)
        v.push_back(q(x));
    return v;
}

}  // namespace

TEST_CASE("derivation bases") {
    CHECK(derivation_basis(abelian(3)).dim() == 9);
    const auto der_l4 = derivation_basis(family(FamilySpec::Tag::L, 4));
    CHECK(der_l4.dim() == 7);
    const auto der_h = derivation_basis(heisenberg());
    CHECK(der_h.dim() == 6);
    // every returned matrix satisfies the derivation identity
    const LieAlgebra l4 = family(FamilySpec::Tag::L, 4);
    for (const auto& d : der_l4.basis)
        CHECK(is_derivation(l4, d));
}

TEST_CASE("inner bases") {
    CHECK(inner_basis(abelian(4)).dim() == 0);
    CHECK(inner_basis(family(FamilySpec::Tag::L, 4)).dim() == 3);
    CHECK(inner_basis(r2()).dim() == 2);
}

TEST_CASE("derivation count equals dim Z^1") {
    for (const auto& g : {family(FamilySpec::Tag::L, 5), heisenberg(), r2()}) {
        const std::size_t z1 = cochain_dim(g.dim(), 1) - delta_sparse(g, 1).rank();
        CHECK(derivation_basis(g).dim() == z1);
        CHECK(inner_basis(g).dim() == delta_sparse(g, 0).rank());
    }
}

TEST_CASE("diagonal torus of L_n") {
    const TorusBasis t = diagonal_torus(family(FamilySpec::Tag::L, 6));
    REQUIRE(t.dim() == 2);
    CHECK(t.weight_vectors[0] == rationals({1, 0, 1, 2, 3, 4}));
    CHECK(t.weight_vectors[1] == rationals({0, 1, 1, 1, 1, 1}));
}

TEST_CASE("diagonal torus of the rank-one families") {
    const LieAlgebra a10 = family(FamilySpec::Tag::A, 10, 4, {q(1), q(0)});
    const TorusBasis ta = diagonal_torus(a10);
    REQUIRE(ta.dim() == 1);
    CHECK(ta.weight_vectors[0] == rationals({1, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
    CHECK(weight_system(a10, ta).zero_weight.empty());

    FamilySpec c8;
    c8.tag = FamilySpec::Tag::C;
    c8.n = 8;
    c8.lambda = {q(1), q(1)};
    const TorusBasis tc = diagonal_torus(build_family(c8));
    REQUIRE(tc.dim() == 1);
    CHECK(tc.weight_vectors[0] == rationals({0, 1, 1, 1, 1, 1, 1, 2}));
}

TEST_CASE("weight systems") {
    const LieAlgebra l6 = family(FamilySpec::Tag::L, 6);
    const WeightSystem ws = weight_system(l6, diagonal_torus(l6));
    CHECK(ws.torus_dim == 2);
    CHECK(ws.generators == std::vector<std::uint32_t>{0, 1});
    CHECK(ws.weights[0] == rationals({1, 0}));
    CHECK(ws.weights[1] == rationals({0, 1}));
    CHECK(ws.weights[2] == rationals({1, 1}));
    CHECK(ws.weights[3] == rationals({2, 1}));
    CHECK(ws.weights[4] == rationals({3, 1}));
    CHECK(ws.weights[5] == rationals({4, 1}));
    CHECK(ws.zero_weight.empty());

    FamilySpec c8;
    c8.tag = FamilySpec::Tag::C;
    c8.n = 8;
    c8.lambda = {q(1), q(1)};
    const LieAlgebra c = build_family(c8);
    const WeightSystem wc = weight_system(c, diagonal_torus(c));
    CHECK(wc.zero_weight == std::vector<std::uint32_t>{0});  // Y1 sits at weight zero
}

TEST_CASE("completeness verdicts") {
    const CompletenessVerdict vr2 = is_complete(r2());
    CHECK(vr2.complete);
    CHECK(vr2.h0 == 0);
    CHECK(vr2.h1 == 0);

    const CompletenessVerdict vl6 = is_complete(family(FamilySpec::Tag::L, 6));
    CHECK(!vl6.complete);
    CHECK(vl6.h0 == 1);
    REQUIRE(vl6.central_witness.has_value());
    REQUIRE(vl6.outer_witness.has_value());
    CHECK(is_derivation(family(FamilySpec::Tag::L, 6), *vl6.outer_witness));
}

TEST_CASE("semidirect of C8 is not complete and the witness moves Y2 to Y7") {
    FamilySpec c8;
    c8.tag = FamilySpec::Tag::C;
    c8.n = 8;
    c8.lambda = {q(1), q(1)};
    const LieAlgebra c = build_family(c8);
    const LieAlgebra sd = semidirect(c, diagonal_torus(c));
    const CompletenessVerdict v = is_complete(sd);
    CHECK(!v.complete);
    CHECK(v.h0 == 0);
    CHECK(v.h1 > 0);
    REQUIRE(v.outer_witness.has_value());
    CHECK(is_derivation(sd, *v.outer_witness));
    CHECK(!v.outer_witness->at(6, 1).is_zero());  // Y2 -> Y7 component
}

TEST_CASE("nilpotent algebras always have outer derivations") {
    for (const auto& g : {family(FamilySpec::Tag::L, 6), family(FamilySpec::Tag::Q, 8),
                          family(FamilySpec::Tag::A, 8, 2, {q(1), q(1)}), heisenberg()}) {
        const CompletenessVerdict v = is_complete(g);
        CHECK(v.h1 > 0);
        CHECK(!v.complete);
    }
}

TEST_CASE("rank certificates") {
    CHECK(rank_certificate(family(FamilySpec::Tag::L, 8)).rank_lower_bound == 2);
    CHECK(rank_certificate(family(FamilySpec::Tag::B, 8, 2, {q(1), q(-2)})).rank_lower_bound ==
          1);
    CHECK(rank_certificate(abelian(3)).rank_lower_bound == 3);
    CHECK_THROWS_AS(rank_certificate(r2()), std::invalid_argument);
}
