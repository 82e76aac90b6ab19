#include <doctest.h>

#include <random>

#include "rees/errors.hpp"
#include "rees/polynomial.hpp"

using namespace rees;

namespace {

RingPtr ring_xyz(std::uint32_t p = 32003) {
    return Ring::make(Field(p), {"x", "y", "z"});
}

Polynomial rand_poly(const RingPtr& R, std::mt19937_64& rng, int max_terms = 6,
                     std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> e(R->var_count());
        for (auto& v : e)
            v = exp(rng);
        terms.push_back({Monomial(std::move(e)), R->field().from_int(coeff(rng))});
    }
    return Polynomial::from_terms(R, std::move(terms));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("parse/print round trip on canonical forms") {
    auto R = ring_xyz();
    for (const char* s : {
             "0",
             "1",
             "-1",
             "x",
             "3*x^2*y - 2*y + 1",
             "x*y*z",
             "-x^3 + x*y^2 - z",
             "16001*x + 16001",  // stays in balanced range: 16001 = (32003-1)/2
         }) {
        CAPTURE(s);
        CHECK(to_string(parse_polynomial(R, s)) == s);
    }
}

TEST_CASE("parser accepts the loose input forms") {
    auto R = ring_xyz();
    const Polynomial expect = parse_polynomial(R, "2*x^2 + x*y - 3");
    CHECK(parse_polynomial(R, "2x^2 + x y*1 - 3") == expect);
    CHECK(parse_polynomial(R, "x(2x + y) - 3") == expect);
    CHECK(parse_polynomial(R, " + 2 * x ^ 2 + y x - 3 ") == expect);
    // Coefficients reduce mod p: 32006 == 3.
    CHECK(parse_polynomial(R, "32006*x") == parse_polynomial(R, "3*x"));
    // Sums collapse and cancel.
    CHECK(parse_polynomial(R, "x + x + x - 3*x").is_zero());
    CHECK(parse_polynomial(R, "(x+y)^2") == parse_polynomial(R, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("parser rejects garbage") {
    auto R = ring_xyz();
    CHECK_THROWS_AS(parse_polynomial(R, "w + 1"), InputError);    // unknown variable
    CHECK_THROWS_AS(parse_polynomial(R, "x +"), InputError);
    CHECK_THROWS_AS(parse_polynomial(R, "x ^ y"), InputError);
    CHECK_THROWS_AS(parse_polynomial(R, "(x"), InputError);
    CHECK_THROWS_AS(parse_polynomial(R, "x4"), InputError);       // not a declared name
    CHECK_THROWS_AS(parse_polynomial(R, ""), InputError);
}

TEST_CASE("terms stay sorted and merged under the storage order") {
    auto R = ring_xyz();
    const Polynomial f = parse_polynomial(R, "z + x^2 + y + x*y + 1 + y^2");
    // grevlex descending: x^2 > x*y > y^2 > x? no x term; then y > z > 1.
    CHECK(to_string(f) == "x^2 + x*y + y^2 + y + z + 1");
    CHECK(f.leading_term().mono == Monomial({2, 0, 0}));
    CHECK(f.total_degree() == 2);
    CHECK(f.term_count() == 6);
}

TEST_CASE("ring algebra identities hold on random inputs") {
    auto R = ring_xyz();
    std::mt19937_64 rng(20260815);
    for (int round = 0; round < 60; ++round) {
        const Polynomial a = rand_poly(R, rng);
        const Polynomial b = rand_poly(R, rng);
        const Polynomial c = rand_poly(R, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).is_zero());
        CHECK(a * (b * c) == (a * b) * c);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    auto R = ring_xyz();
    const Polynomial f = parse_polynomial(R, "x + y - 2*z");
    Polynomial g = Polynomial::constant(R, 1);
    for (std::uint32_t e = 0; e <= 5; ++e) {
        CHECK(pow(f, e) == g);
        g = g * f;
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    auto R = ring_xyz();
    // x -> y + z, y -> y, z -> x*z as a self-map.
    const std::vector<Polynomial> images = {
        parse_polynomial(R, "y + z"),
        parse_polynomial(R, "y"),
        parse_polynomial(R, "x*z"),
    };
    const Polynomial f = parse_polynomial(R, "x^2 - y*z");
    CHECK(substitute(f, R, images) ==
          parse_polynomial(R, "(y+z)^2 - y*x*z"));
    std::mt19937_64 rng(7);
    for (int round = 0; round < 25; ++round) {
        const Polynomial a = rand_poly(R, rng, 4, 2);
        const Polynomial b = rand_poly(R, rng, 4, 2);
        CHECK(substitute(a * b, R, images) ==
              substitute(a, R, images) * substitute(b, R, images));
        CHECK(substitute(a + b, R, images) ==
              substitute(a, R, images) + substitute(b, R, images));
    }
}

TEST_CASE("map_to_ring embeds along variable names") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    auto S = Ring::extend_with_forms(R, 2);   // x, y, T1, T2
    auto St = Ring::extend_with_elim(S);      // t, x, y, T1, T2
    const Polynomial f = parse_polynomial(R, "x^2 - 3*y");
    const Polynomial fS = map_to_ring(f, S);
    CHECK(to_string(fS) == "x^2 - 3*y");
    CHECK(fS.ring()->var_count() == 4);
    const Polynomial fSt = map_to_ring(fS, St);
    CHECK(to_string(fSt) == "x^2 - 3*y");
    // And back down, since t does not occur.
    CHECK(map_to_ring(fSt, S) == fS);
    // A polynomial using T1 cannot be pushed down to R.
    CHECK_THROWS_AS(map_to_ring(parse_polynomial(S, "T1"), R), InternalError);
}

TEST_CASE("exact division succeeds exactly when it should") {
    auto R = ring_xyz();
    const Polynomial d = parse_polynomial(R, "x - y + 1");
    const Polynomial q = parse_polynomial(R, "x^2 + y*z - 4");
    auto quotient = try_divide_exact(d * q, d);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == q);
    CHECK_FALSE(try_divide_exact(d * q + Polynomial::constant(R, 1), d).has_value());
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        const Polynomial a = rand_poly(R, rng, 5, 2);
        Polynomial b = rand_poly(R, rng, 5, 2);
        if (b.is_zero())
            b = parse_polynomial(R, "x");
        auto qq = try_divide_exact(a * b, b);
        REQUIRE(qq.has_value());
        CHECK(*qq == a);
    }
}

TEST_CASE("rational coefficients survive arithmetic exactly") {
    auto Q = Ring::make(Field(0), {"x", "y"});
    const Polynomial f = parse_polynomial(Q, "x - y");
    const Polynomial g = parse_polynomial(Q, "x + y");
    CHECK(to_string(f * g) == "x^2 - y^2");
    const Polynomial half = Polynomial::constant(Q, Field(0).div(Field(0).one(), Field(0).from_int(2)));
    CHECK(to_string(half * parse_polynomial(Q, "2*x + 4")) == "x + 2");
}

}  // TEST_SUITE
