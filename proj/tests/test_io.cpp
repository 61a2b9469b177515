#include <doctest.h>

#include <sstream>

#include "liecoh/families.hpp"
#include "liecoh/io.hpp"

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
    return LieAlgebra::create(3, {"e1", "e2", "e3"}, std::move(t));
}

int run(const std::vector<std::string>& args, const std::string& input, std::string& output,
        std::string& error) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_command(args, in, out, err);
    output = out.str();
    error = err.str();
    return code;
}

}  // namespace

TEST_CASE("algebra serialization round trip") {
    const LieAlgebra h = heisenberg();
    const std::string text = serialize_algebra(h);
    CHECK(text.find("\"i\": 1") != std::string::npos);
    CHECK(text.find("\"3\": \"1\"") != std::string::npos);
    const LieAlgebra back = parse_algebra(text);
    CHECK(serialize_algebra(back) == text);  // byte-identical round trip
    CHECK(back.dim() == 3);
    CHECK(back.labels() == h.labels());

    FamilySpec s;
    s.tag = FamilySpec::Tag::A;
    s.n = 10;
    s.k = 4;
    s.lambda = {q(1), q(0)};
    const LieAlgebra a = build_family(s);
    CHECK(serialize_algebra(parse_algebra(serialize_algebra(a))) == serialize_algebra(a));
}

TEST_CASE("algebra parse errors") {
    CHECK_THROWS_AS(parse_algebra("not json"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{}"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra(R"({"dim":2,"brackets":[{"i":1,"j":1,"coeffs":{}}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra(R"({"dim":2,"brackets":[{"i":1,"j":5,"coeffs":{}}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"x"}}]})"), ParseError);

    // a Jacobi-violating table is rejected unless asked otherwise
    const std::string bad = R"({"dim":4,"brackets":[
        {"i":1,"j":2,"coeffs":{"3":"1"}},
        {"i":1,"j":3,"coeffs":{"4":"1"}},
        {"i":2,"j":3,"coeffs":{"2":"1"}}]})";
    CHECK_THROWS_AS(parse_algebra(bad), CheckError);
    CHECK(parse_algebra(bad, {.skip_jacobi = true}).dim() == 4);
}

TEST_CASE("cochain serialization round trip") {
    const LieAlgebra h = heisenberg();
    Cochain c(h, 2);
    VectorQ v(3);
    v[0] = Rational(2, 3);
    c.set({0, 2}, v);
    const std::string text = serialize_cochain(c);
    CHECK(parse_cochain(text, h) == c);
    CHECK(serialize_cochain(parse_cochain(text, h)) == text);
}

TEST_CASE("family spec grammar") {
    const FamilySpec a = parse_family_spec({"A", "n=10", "k=4", "lambda=1,0"});
    CHECK(a.tag == FamilySpec::Tag::A);
    CHECK(a.n == 10);
    CHECK(a.k == 4);
    CHECK(a.lambda == std::vector<Rational>{q(1), q(0)});
    CHECK(family_spec_to_string(a) == "A n=10 k=4 lambda=1,0");

    const FamilySpec rh = parse_family_spec({"rh", "k=4", "h=3", "lambda=1,1"});
    CHECK(rh.tag == FamilySpec::Tag::Rh);
    CHECK(rh.h == 3);

    CHECK_THROWS_AS(parse_family_spec({"Z", "n=4"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec({"L"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec({"A", "n=10"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec({"L", "n=6", "bogus=1"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec({"L", "n=6", "lambda=1/"}), std::invalid_argument);
}

TEST_CASE("cli family and pipe composition") {
    std::string algebra, err;
    CHECK(run({"family", "L", "n=6"}, "", algebra, err) == 0);
    CHECK(algebra.find("\"dim\": 6") != std::string::npos);

    std::string verdict;
    CHECK(run({"complete"}, algebra, verdict, err) == 0);
    CHECK(verdict.find("\"h0\": 1") != std::string::npos);
    CHECK(verdict.find("\"complete\": false") != std::string::npos);

    std::string extended;
    CHECK(run({"semidirect"}, algebra, extended, err) == 0);
    CHECK(extended.find("\"dim\": 8") != std::string::npos);
    CHECK(run({"complete"}, extended, verdict, err) == 0);
    CHECK(verdict.find("\"complete\": true") != std::string::npos);

    std::string dims;
    CHECK(run({"cohomology", "--p", "1"}, algebra, dims, err) == 0);
    CHECK(dims.find("\"p\": 1") != std::string::npos);

    // family rh k=4 h=3 lambda=1,1 | cohomology --p 2 reports dim H^2 >= 1
    std::string rh;
    CHECK(run({"family", "rh", "k=4", "h=3", "lambda=1,1"}, "", rh, err) == 0);
    CHECK(rh.find("\"dim\": 11") != std::string::npos);
    std::string h2;
    CHECK(run({"cohomology", "--p", "2"}, rh, h2, err) == 0);
    CHECK(h2.find("\"dim_cohomology\": 1") != std::string::npos);
}

TEST_CASE("cli file io and table format") {
    std::string out, err;
    const std::string path = "/tmp/liecoh_test_algebra.json";
    CHECK(run({"family", "Q", "n=6", "--output", path}, "", out, err) == 0);
    CHECK(out.empty());
    CHECK(run({"complete", "--input", path, "--format", "table"}, "", out, err) == 0);
    CHECK(out.find("h0: 1") != std::string::npos);
    CHECK(out.find("complete: false") != std::string::npos);
}

TEST_CASE("cli jacobi exit codes") {
    std::string out, err;
    const std::string bad = R"({"dim":4,"brackets":[
        {"i":1,"j":2,"coeffs":{"3":"1"}},
        {"i":1,"j":3,"coeffs":{"4":"1"}},
        {"i":2,"j":3,"coeffs":{"2":"1"}}]})";
    CHECK(run({"jacobi"}, bad, out, err) == 1);
    CHECK(out.find("\"jacobi\": \"fail\"") != std::string::npos);

    std::string algebra;
    CHECK(run({"family", "Q", "n=6"}, "", algebra, err) == 0);
    CHECK(run({"jacobi"}, algebra, out, err) == 0);
    CHECK(out.find("\"jacobi\": \"pass\"") != std::string::npos);
}

TEST_CASE("cli exit codes for usage and parse errors") {
    std::string out, err;
    CHECK(run({"frobnicate"}, "", out, err) == 2);
    CHECK(run({"cohomology"}, "{}", out, err) == 2);       // missing --p
    CHECK(run({"complete"}, "not json", out, err) == 3);   // parse error
    CHECK(run({"family", "A", "n=10"}, "", out, err) == 2);
    CHECK(run({"family", "B", "n=8", "k=2", "lambda=1,1"}, "", out, err) == 1);  // Jacobi
}

TEST_CASE("cli char-seq and rank") {
    std::string algebra, out, err;
    CHECK(run({"family", "C", "n=8", "lambda=1,1"}, "", algebra, err) == 0);
    CHECK(run({"char-seq"}, algebra, out, err) == 0);
    CHECK(out.find("\"filiform_certified\": true") != std::string::npos);
    CHECK(run({"rank"}, algebra, out, err) == 0);
    CHECK(out.find("\"rank_lower_bound\": 1") != std::string::npos);
    const bool has_zero_weight = out.find("\"zero_weight\"") != std::string::npos;
    CHECK(has_zero_weight);
}

TEST_CASE("cli normalize lambda") {
    std::string a, b, err;
    CHECK(run({"family", "A", "n=10", "k=4", "lambda=2,2", "--normalize-lambda"}, "", a, err) ==
          0);
    CHECK(run({"family", "A", "n=10", "k=4", "lambda=1,1"}, "", b, err) == 0);
    CHECK(a == b);
}

TEST_CASE("serialization is deterministic") {
    FamilySpec s;
    s.tag = FamilySpec::Tag::B;
    s.n = 8;
    s.k = 2;
    s.lambda = {q(1), q(-2)};
    const LieAlgebra b1 = build_family(s);
    const LieAlgebra b2 = build_family(s);
    CHECK(serialize_algebra(b1) == serialize_algebra(b2));
}
