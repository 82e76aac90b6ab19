#include <doctest.h>

#include "rees/errors.hpp"
#include "rees/scalar.hpp"

using namespace rees;

TEST_SUITE("scalar") {

TEST_CASE("prime field arithmetic mod 32003") {
    Field F(32003);
    CHECK(F.is_prime_field());
    const Scalar a = F.from_int(31999);   // -4
    const Scalar b = F.from_int(7);
    CHECK(F.equal(F.add(a, b), F.from_int(3)));
    CHECK(F.equal(F.sub(b, a), F.from_int(11)));
    CHECK(F.equal(F.mul(a, b), F.from_int(-28)));
    CHECK(F.equal(F.neg(a), F.from_int(4)));
    // 7 * inv(7) == 1, and division round-trips.
    CHECK(F.is_one(F.mul(b, F.inv(b))));
    CHECK(F.equal(F.mul(F.div(a, b), b), a));
}

TEST_CASE("every nonzero element of a small prime field is invertible") {
    Field F(101);
    for (std::int64_t v = 1; v < 101; ++v)
        CHECK(F.is_one(F.mul(F.from_int(v), F.inv(F.from_int(v)))));
}

TEST_CASE("rational arithmetic is exact") {
    Field Q(0);
    const Scalar half = Q.div(Q.from_int(1), Q.from_int(2));
    const Scalar third = Q.div(Q.from_int(1), Q.from_int(3));
    // 1/2 + 1/3 = 5/6
    CHECK(Q.to_string(Q.add(half, third)) == "5/6");
    CHECK(Q.to_string(Q.mul(half, third)) == "1/6");
    CHECK(Q.to_string(Q.sub(third, half)) == "-1/6");
    CHECK(Q.is_one(Q.mul(half, Q.from_int(2))));
}

TEST_CASE("balanced display for prime fields") {
    Field F(32003);
    CHECK(F.to_string(F.from_int(32001)) == "-2");
    CHECK(F.to_string(F.from_int(2)) == "2");
    CHECK(F.is_negative_display(F.from_int(32001)));
    CHECK_FALSE(F.is_negative_display(F.from_int(2)));
    CHECK(F.to_string_magnitude(F.from_int(32001)) == "2");
}

TEST_CASE("long literals are reduced into the field") {
    Field F(32003);
    // 10^20 mod 32003 == 20265 (checked with python: pow(10,20,32003))
    CHECK(F.equal(F.from_digits("100000000000000000000"), F.from_int(20265)));
    Field Q(0);
    CHECK(Q.to_string(Q.from_digits("100000000000000000000")) == "100000000000000000000");
}

TEST_CASE("composite or oversized characteristics are rejected") {
    CHECK_THROWS_AS(Field(4), InputError);
    CHECK_THROWS_AS(Field(32001), InputError);  // 3 * 10667
    CHECK_THROWS_AS(Field(1u << 31), InputError);
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(2147483647));  // 2^31 - 1 is prime
}

}  // TEST_SUITE
