#include <doctest.h>

#include <random>

#include "rees/errors.hpp"
#include "rees/matrix.hpp"

using namespace rees;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* s : texts)
        out.push_back(parse_polynomial(R, s));
    return out;
}

PolyMatrix parse_matrix(const RingPtr& R, std::vector<std::vector<const char*>> entries) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : entries) {
        rows.emplace_back();
        for (const char* s : row)
            rows.back().push_back(parse_polynomial(R, s));
    }
    return PolyMatrix::from_rows(R, std::move(rows));
}

RingPtr generic_2x3_ring() {
    return Ring::make(Field(32003), {"x11", "x12", "x13", "x21", "x22", "x23"});
}

PolyMatrix generic_2x3(const RingPtr& R) {
    return parse_matrix(R, {{"x11", "x12", "x13"}, {"x21", "x22", "x23"}});
}

// Entry: a random homogeneous linear form in the base variables (possibly 0).
PolyMatrix random_linear_matrix(const RingPtr& R, std::mt19937_64& rng, std::size_t m,
                                std::size_t n) {
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    PolyMatrix out(R, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial e(R);
            for (std::size_t v = 0; v < R->base_count(); ++v)
                e = e + Polynomial::constant(R, coeff(rng)) *
                            Polynomial::variable(R, R->base_begin() + v);
            out.at(i, j) = std::move(e);
        }
    return out;
}

}  // namespace

TEST_SUITE("detideal") {

TEST_CASE("determinants by hand") {
    auto R = Ring::make(Field(32003), {"x", "y", "z", "w"});
    CHECK(determinant(parse_matrix(R, {{"x", "y"}, {"z", "w"}})) ==
          parse_polynomial(R, "x*w - y*z"));
    CHECK(determinant(parse_matrix(R, {{"x"}})) == parse_polynomial(R, "x"));
    // Vandermonde-ish 3x3 with a zero: expansion picks the sparse row.
    CHECK(determinant(parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}, {"1", "1", "1"}})) ==
          parse_polynomial(R, "x^2 - x*y + y^2"));
    // A singular 4x4 (two equal rows) exercises the Bareiss path.
    CHECK(determinant(parse_matrix(R, {{"x", "y", "z", "w"},
                                       {"y", "z", "w", "x"},
                                       {"x", "y", "z", "w"},
                                       {"w", "x", "y", "z"}}))
              .is_zero());
    // Nonsingular 4x4: Bareiss agrees with cofactor expansion along the
    // first column done by hand on the 3x3 cofactors.
    const PolyMatrix a = parse_matrix(R, {{"x", "y", "0", "0"},
                                          {"0", "x", "y", "0"},
                                          {"0", "0", "x", "y"},
                                          {"y", "0", "0", "x"}});
    CHECK(determinant(a) == parse_polynomial(R, "x^4 - y^4"));
}

TEST_CASE("minors ideals of a 2x2") {
    auto R = Ring::make(Field(32003), {"x", "y", "z", "w"});
    const PolyMatrix m = parse_matrix(R, {{"x", "y"}, {"z", "w"}});
    CHECK(ideal_equal(minors_ideal(m, 2), Ideal(R, parse_all(R, {"x*w - y*z"}))));
    CHECK(ideal_equal(minors_ideal(m, 1), Ideal(R, parse_all(R, {"x", "y", "z", "w"}))));
    CHECK_THROWS_AS(minors_ideal(m, 3), InputError);
    CHECK_THROWS_AS(minors_ideal(m, 0), InputError);
}

TEST_CASE("generic 2x3 minors have grade 2") {
    auto R = generic_2x3_ring();
    Ideal I = minors_ideal(generic_2x3(R), 2);
    CHECK(I.gens().size() == 3);
    CHECK(grade(I) == GradeValue::finite(2));
}

TEST_CASE("grade profiles") {
    SUBCASE("generic 2x3") {
        auto R = generic_2x3_ring();
        const GradeProfile p = grade_profile(generic_2x3(R));
        REQUIRE(p.entries.size() == 2);
        CHECK(p.entries[0] == std::pair<std::size_t, GradeValue>{1, GradeValue::finite(6)});
        CHECK(p.entries[1] == std::pair<std::size_t, GradeValue>{2, GradeValue::finite(2)});
    }
    SUBCASE("the catalecticant-style 2x3 in two variables") {
        auto R = Ring::make(Field(32003), {"x", "y"});
        const PolyMatrix m = parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}});
        const GradeProfile p = grade_profile(m);
        REQUIRE(p.entries.size() == 2);
        // I_1 = (x, y) has grade 2; I_2 = (x^2, xy, y^2) also has grade 2
        // (dim k[x,y]/I_2 = 0), computed by the dimension oracle.
        CHECK(p.entries[0].second == GradeValue::finite(2));
        CHECK(p.entries[1].second == GradeValue::finite(2));
    }
    SUBCASE("zero 1x1") {
        auto R = Ring::make(Field(32003), {"x"});
        const GradeProfile p = grade_profile(parse_matrix(R, {{"0"}}));
        REQUIRE(p.entries.size() == 1);
        CHECK(p.entries[0].second == GradeValue::finite(0));
    }
}

TEST_CASE("linear forms") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    auto S = Ring::extend_with_forms(R, 3);
    const PolyMatrix m = parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}});
    const auto f = linear_forms(m, S);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == parse_polynomial(S, "x*T1 + y*T2"));
    CHECK(f[1] == parse_polynomial(S, "x*T2 + y*T3"));
    // Every term has T-degree exactly 1.
    for (const auto& fi : f)
        for (const auto& t : fi.terms())
            CHECK(t.mono.degree_in(S->forms_begin(), S->var_count()) == 1);
    // Zero matrix gives zero forms.
    const auto z = linear_forms(PolyMatrix(R, 2, 3), S);
    CHECK(z[0].is_zero());
    CHECK(z[1].is_zero());
    // 1x2 case.
    auto S2 = Ring::extend_with_forms(R, 2);
    const auto f2 = linear_forms(parse_matrix(R, {{"x", "y"}}), S2);
    CHECK(f2[0] == parse_polynomial(S2, "x*T1 + y*T2"));
    CHECK_THROWS_AS(linear_forms(m, S2), InputError);
}

TEST_CASE("signed maximal minors satisfy the Laplace identity") {
    SUBCASE("1x2 by hand") {
        auto R = Ring::make(Field(32003), {"x", "y"});
        const PolyMatrix m = parse_matrix(R, {{"x", "y"}});
        const auto g = signed_maximal_minors(m);
        REQUIRE(g.size() == 2);
        CHECK(g[0] == parse_polynomial(R, "y"));
        CHECK(g[1] == parse_polynomial(R, "-x"));
    }
    SUBCASE("2x3 catalecticant by hand") {
        auto R = Ring::make(Field(32003), {"x", "y"});
        const PolyMatrix m = parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}});
        const auto g = signed_maximal_minors(m);
        REQUIRE(g.size() == 3);
        CHECK(g[0] == parse_polynomial(R, "y^2"));
        CHECK(g[1] == parse_polynomial(R, "-x*y"));
        CHECK(g[2] == parse_polynomial(R, "x^2"));
    }
    SUBCASE("generic and random matrices") {
        auto R = generic_2x3_ring();
        std::mt19937_64 rng(8128);
        for (int round = 0; round < 12; ++round) {
            const PolyMatrix m = round == 0 ? generic_2x3(R) : random_linear_matrix(R, rng, 2, 3);
            const auto g = signed_maximal_minors(m);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Polynomial dot(R);
                for (std::size_t j = 0; j < m.cols(); ++j)
                    dot = dot + m.at(i, j) * g[j];
                CHECK(dot.is_zero());
            }
        }
    }
    SUBCASE("shape is enforced") {
        auto R = Ring::make(Field(32003), {"x"});
        CHECK_THROWS_AS(signed_maximal_minors(parse_matrix(R, {{"x"}})), InputError);
    }
}

TEST_CASE("matrix rank oracles") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    CHECK(matrix_rank(PolyMatrix(R, 3, 3)) == 0);
    const PolyMatrix id3 = parse_matrix(R, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    CHECK(matrix_rank(id3) == 3);
    CHECK(matrix_rank(parse_matrix(R, {{"x", "y"}, {"x", "y"}})) == 1);
    CHECK(matrix_rank(parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}})) == 2);
    CHECK(matrix_rank(PolyMatrix(R, 0, 5)) == 0);
}

TEST_CASE("rank agrees with exhaustive minor search on random small matrices") {
    auto R = Ring::make(Field(32003), {"x", "y", "z"});
    std::mt19937_64 rng(1729);
    for (int round = 0; round < 15; ++round) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        PolyMatrix a = random_linear_matrix(R, rng, m, n);
        if (round % 3 == 0 && m > 1) {
            // Plant a dependent row to hit degenerate ranks.
            for (std::size_t j = 0; j < n; ++j)
                a.at(m - 1, j) = a.at(0, j) + a.at(m > 2 ? 1 : 0, j);
        }
        std::size_t by_minors = 0;
        for (std::size_t k = 1; k <= std::min(m, n); ++k)
            if (!minors_ideal(a, k).is_zero_ideal())
                by_minors = k;
        CHECK(matrix_rank(a) == by_minors);
    }
}

TEST_CASE("elementary operations act as stated") {
    auto R = Ring::make(Field(32003), {"x", "y", "z", "w", "c"});
    const PolyMatrix m = parse_matrix(R, {{"x", "y"}, {"z", "w"}});
    CHECK(apply_elementary_op(m, ElementaryOp::row_swap(0, 1)) ==
          parse_matrix(R, {{"z", "w"}, {"x", "y"}}));
    CHECK(apply_elementary_op(m, ElementaryOp::row_scale(0, parse_polynomial(R, "5"))) ==
          parse_matrix(R, {{"5*x", "5*y"}, {"z", "w"}}));
    CHECK(apply_elementary_op(m, ElementaryOp::row_add(1, 0, parse_polynomial(R, "c"))) ==
          parse_matrix(R, {{"x", "y"}, {"z + c*x", "w + c*y"}}));
    CHECK(apply_elementary_op(m, ElementaryOp::col_swap(0, 1)) ==
          parse_matrix(R, {{"y", "x"}, {"w", "z"}}));
    CHECK(apply_elementary_op(m, ElementaryOp::col_scale(1, parse_polynomial(R, "-1"))) ==
          parse_matrix(R, {{"x", "-y"}, {"z", "-w"}}));
    // col 0 += c * col 1.
    const PolyMatrix one_row = parse_matrix(R, {{"x", "y"}});
    CHECK(apply_elementary_op(one_row, ElementaryOp::col_add(0, 1, parse_polynomial(R, "c"))) ==
          parse_matrix(R, {{"x + c*y", "y"}}));
    // Scaling by 1 is the identity transformation.
    CHECK(apply_elementary_op(m, ElementaryOp::row_scale(0, parse_polynomial(R, "1"))) == m);
    CHECK_THROWS_AS(ElementaryOp::row_scale(0, parse_polynomial(R, "x")), InputError);
    CHECK_THROWS_AS(ElementaryOp::row_scale(0, parse_polynomial(R, "0")), InputError);
    CHECK_THROWS_AS(ElementaryOp::row_swap(1, 1), InputError);
    CHECK_THROWS_AS(apply_elementary_op(m, ElementaryOp::row_swap(0, 5)), InputError);
}

TEST_CASE("form substitutions certify the transformed ideals") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    auto S = Ring::extend_with_forms(R, 3);
    const PolyMatrix m = parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}});
    const Ideal forms = linear_forms_ideal(m, S);

    auto check_op = [&](const ElementaryOp& op) {
        const TransformedForms result = transform_linear_forms(m, op, S);
        // phi maps the old form ideal exactly onto the new one.
        CHECK(ideal_equal(result.phi.apply(forms), Ideal(S, result.forms)));
        // Minor ideals are invariant under every elementary operation.
        for (std::size_t k = 1; k <= m.rows(); ++k)
            CHECK(ideal_equal(minors_ideal(m, k), minors_ideal(result.matrix, k)));
        // So is the grade of the form ideal.
        CHECK(grade(Ideal(S, result.forms)) == grade(forms));
    };

    check_op(ElementaryOp::row_swap(0, 1));
    check_op(ElementaryOp::row_scale(1, parse_polynomial(R, "7")));
    check_op(ElementaryOp::row_add(0, 1, parse_polynomial(R, "x - 2*y")));
    check_op(ElementaryOp::col_swap(0, 2));
    check_op(ElementaryOp::col_scale(2, parse_polynomial(R, "-3")));
    check_op(ElementaryOp::col_add(1, 2, parse_polynomial(R, "y")));

    // Row operations leave the forms' ideal literally unchanged.
    const TransformedForms swapped =
        transform_linear_forms(m, ElementaryOp::row_swap(0, 1), S);
    CHECK(ideal_equal(Ideal(S, swapped.forms), forms));
    // Column scale by 1 gives the identity substitution.
    const TransformedForms trivial =
        transform_linear_forms(m, ElementaryOp::col_scale(0, parse_polynomial(R, "1")), S);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(trivial.phi.images[j] == Polynomial::variable(S, S->forms_begin() + j));
}

TEST_CASE("sequences of operations compose their substitutions") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    auto S = Ring::extend_with_forms(R, 3);
    const PolyMatrix m = parse_matrix(R, {{"x", "y", "0"}, {"0", "x", "y"}});
    const std::vector<ElementaryOp> ops = {
        ElementaryOp::col_add(0, 2, parse_polynomial(R, "x")),
        ElementaryOp::row_add(1, 0, parse_polynomial(R, "y")),
        ElementaryOp::col_swap(1, 2),
        ElementaryOp::col_scale(0, parse_polynomial(R, "2")),
    };
    const TransformedForms result = transform_linear_forms(m, ops, S);
    CHECK(ideal_equal(result.phi.apply(linear_forms_ideal(m, S)),
                      Ideal(S, result.forms)));
}

TEST_CASE("input matrix validation") {
    auto R = Ring::make(Field(32003), {"x", "y"});
    auto S = Ring::extend_with_forms(R, 2);
    CHECK_THROWS_AS(make_input_matrix(R, {{parse_polynomial(R, "x")},
                                          {parse_polynomial(R, "y")}}),
                    InputError);  // 2x1 violates m <= n
    CHECK_THROWS_AS(make_input_matrix(S, {{parse_polynomial(S, "T1")}}), InputError);
    CHECK_NOTHROW(make_input_matrix(S, {{parse_polynomial(S, "x + 2*y")}}));
    CHECK_NOTHROW(make_input_matrix(R, {{parse_polynomial(R, "x^2 - y")}}));
}

}  // TEST_SUITE
