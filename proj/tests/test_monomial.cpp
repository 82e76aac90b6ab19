#include <doctest.h>

#include <algorithm>
#include <vector>

#include "rees/monomial.hpp"

using namespace rees;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_SUITE("monomial") {

TEST_CASE("grevlex ordering of the degree-2 monomials in x, y, z") {
    // In k[x,y,z] (x first): x^2 > x*y > y^2 > x*z > y*z > z^2.
    const MonomialOrder ord{OrderKind::Grevlex, 0};
    const std::vector<Monomial> expected = {
        mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
        mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2}),
    };
    auto sorted = expected;
    std::reverse(sorted.begin(), sorted.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
        return cmp_monomials(a, b, ord) > 0;
    });
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(sorted[i] == expected[i]);
    // Degree dominates: z^3 > x^2.
    CHECK(cmp_monomials(mono({0, 0, 3}), mono({2, 0, 0}), ord) > 0);
}

TEST_CASE("lex ordering ignores total degree") {
    const MonomialOrder ord{OrderKind::Lex, 0};
    CHECK(cmp_monomials(mono({1, 0, 0}), mono({0, 5, 5}), ord) > 0);   // x > y^5 z^5
    CHECK(cmp_monomials(mono({1, 1, 0}), mono({1, 0, 9}), ord) > 0);   // xy > x z^9
    CHECK(cmp_monomials(mono({0, 1, 0}), mono({0, 1, 0}), ord) == 0);
}

TEST_CASE("block order eliminates the front variable") {
    // Variables (t, x, y), front block {t}: any power of t outweighs the tail.
    const MonomialOrder ord{OrderKind::Block, 1};
    CHECK(cmp_monomials(mono({1, 0, 0}), mono({0, 9, 9}), ord) > 0);
    CHECK(cmp_monomials(mono({2, 0, 0}), mono({1, 9, 9}), ord) > 0);
    // Same t-power: fall back to grevlex on (x, y).
    CHECK(cmp_monomials(mono({1, 2, 0}), mono({1, 1, 1}), ord) > 0);
    CHECK(cmp_monomials(mono({1, 0, 2}), mono({1, 1, 1}), ord) < 0);
}

TEST_CASE("divisibility, lcm, and coprimality") {
    const Monomial a = mono({1, 2, 0});
    const Monomial b = mono({2, 2, 1});
    CHECK(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK(b.divide_exact(a) == mono({1, 0, 1}));
    CHECK(a.lcm(mono({0, 1, 3})) == mono({1, 2, 3}));
    CHECK(mono({1, 0, 0}).coprime(mono({0, 2, 1})));
    CHECK_FALSE(a.coprime(b));
    CHECK(a.times(b) == mono({3, 4, 1}));
    CHECK(a.degree() == 3);
    CHECK(a.degree_in(1, 3) == 2);
}

TEST_CASE("support masks track exactly the variables present") {
    CHECK(mono({1, 0, 1}).support_mask() == 0b101);
    CHECK(mono({0, 0, 0}).support_mask() == 0);
    CHECK(mono({0, 0, 0}).is_one());
}

}  // TEST_SUITE
