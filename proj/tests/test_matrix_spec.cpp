#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rees/errors.hpp"
#include "rees/matrix_spec.hpp"

using namespace rees;

namespace {

nlohmann::json witness_doc() {
    return nlohmann::json::parse(
        R"({"characteristic": 32003, "vars": ["x", "y"],
            "matrix": [["x", "y", "0"], ["0", "x", "y"]], "label": "witness"})");
}

}  // namespace

TEST_SUITE("matrix_spec") {

TEST_CASE("well-formed specs parse and build") {
    const MatrixSpec spec = parse_matrix_spec(witness_doc());
    CHECK(spec.characteristic == 32003);
    CHECK(spec.vars == std::vector<std::string>{"x", "y"});
    CHECK(spec.label == "witness");
    REQUIRE(spec.entries.size() == 2);
    REQUIRE(spec.entries[0].size() == 3);

    auto [ring, m] = build_matrix(spec);
    CHECK(ring->field().characteristic() == 32003);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 0) == parse_polynomial(ring, "x"));
    CHECK(m.at(1, 2) == parse_polynomial(ring, "y"));
    CHECK(m.at(1, 0).is_zero());
}

TEST_CASE("characteristic zero selects the rationals") {
    auto doc = witness_doc();
    doc["characteristic"] = 0;
    const MatrixSpec spec = parse_matrix_spec(doc);
    CHECK(spec_ring(spec)->field().characteristic() == 0);
}

TEST_CASE("the matrix block is optional but required to build") {
    auto doc = witness_doc();
    doc.erase("matrix");
    const MatrixSpec spec = parse_matrix_spec(doc);
    CHECK(spec.entries.empty());
    CHECK_NOTHROW(spec_ring(spec));
    CHECK_THROWS_AS(build_matrix(spec), InputError);
}

TEST_CASE("schema violations carry the offending field") {
    auto missing_char = witness_doc();
    missing_char.erase("characteristic");
    CHECK_THROWS_WITH_AS(parse_matrix_spec(missing_char),
                         doctest::Contains("characteristic"), InputError);

    auto missing_vars = witness_doc();
    missing_vars.erase("vars");
    CHECK_THROWS_WITH_AS(parse_matrix_spec(missing_vars), doctest::Contains("vars"),
                         InputError);

    auto ragged = witness_doc();
    ragged["matrix"] = {{"x", "y"}, {"x"}};
    CHECK_THROWS_WITH_AS(parse_matrix_spec(ragged), doctest::Contains("row 1"),
                         InputError);

    auto non_string = witness_doc();
    non_string["matrix"] = {{"x", 3, "y"}};
    CHECK_THROWS_WITH_AS(parse_matrix_spec(non_string), doctest::Contains("(0,1)"),
                         InputError);

    auto tall = witness_doc();
    tall["matrix"] = {{"x"}, {"y"}};
    CHECK_THROWS_WITH_AS(parse_matrix_spec(tall), doctest::Contains("m <= n"),
                         InputError);

    auto unknown = witness_doc();
    unknown["extra"] = 1;
    CHECK_THROWS_WITH_AS(parse_matrix_spec(unknown), doctest::Contains("extra"),
                         InputError);

    auto negative = witness_doc();
    negative["characteristic"] = -5;
    CHECK_THROWS_AS(parse_matrix_spec(negative), InputError);
}

TEST_CASE("composite characteristic fails at ring construction") {
    auto doc = witness_doc();
    doc["characteristic"] = 6;
    const MatrixSpec spec = parse_matrix_spec(doc);
    CHECK_THROWS_WITH_AS(spec_ring(spec), doctest::Contains("not prime"), InputError);
}

TEST_CASE("bad entry text points at its coordinates") {
    auto doc = witness_doc();
    doc["matrix"] = {{"x", "y + w", "0"}};
    const MatrixSpec spec = parse_matrix_spec(doc);
    CHECK_THROWS_WITH_AS(build_matrix(spec), doctest::Contains("(0,1)"), InputError);
}

TEST_CASE("file loading") {
    const auto path = std::filesystem::temp_directory_path() / "reescheck_spec.json";
    {
        std::ofstream f(path);
        f << witness_doc().dump();
    }
    const MatrixSpec spec = load_matrix_spec(path.string());
    CHECK(spec.label == "witness");
    std::filesystem::remove(path);

    CHECK_THROWS_WITH_AS(load_matrix_spec("/no/such/file.json"),
                         doctest::Contains("/no/such/file.json"), InputError);

    const auto bad = std::filesystem::temp_directory_path() / "reescheck_bad.json";
    {
        std::ofstream f(bad);
        f << "{ not json";
    }
    CHECK_THROWS_WITH_AS(load_matrix_spec(bad.string()), doctest::Contains("invalid JSON"),
                         InputError);
    std::filesystem::remove(bad);
}

TEST_CASE("random matrices respect the requested shape and degree") {
    auto R = Ring::make(Field(32003), {"x", "y", "z"});
    std::mt19937_64 rng(5);
    const PolyMatrix a = random_matrix(R, rng, 2, 3, 2);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(a.at(i, j).total_degree() <= 2);
    // Same seed, same matrix.
    std::mt19937_64 rng2(5);
    CHECK(random_matrix(R, rng2, 2, 3, 2) == a);
}

}  // TEST_SUITE
