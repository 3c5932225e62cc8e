#include <doctest.h>

#include "epsymp/io.hpp"
#include "epsymp/properties.hpp"

using namespace epsymp;

TEST_CASE("matrix text and JSON formats") {
    const Matrix phi = fixture_matrix(0.1, 2.0);
    const std::string text = format_matrix(phi);
    CHECK(text.rfind("n 2\n", 0) == 0);
    CHECK(parse_matrix(text) == phi);
    CHECK(parse_matrix(matrix_to_json(phi).dump()) == phi);
    Rng rng(1);
    const Matrix g = random_gaussian(6, 6, rng);
    CHECK(parse_matrix(format_matrix(g)) == g);  // %.17g round-trips
    CHECK_THROWS_AS(parse_matrix("n 1\n1 0\n0"), InputError);
    CHECK_THROWS_AS(parse_matrix("n 1\n1 0\n0 x"), InputError);
    CHECK_THROWS_AS(parse_matrix("m 1\n1 0\n0 1"), InputError);
    CHECK_THROWS_AS(parse_matrix("n 1\n1 0\n0 1 5"), InputError);
    CHECK_THROWS_AS(parse_matrix("{\"n\": 1, \"rows\": [[1, 0]]}"), InputError);
    CHECK_THROWS_AS(parse_matrix("{\"n\": 1, "), InputError);
}

TEST_CASE("covector JSON") {
    const Json j = Json::parse(R"({"m": 4, "k": 2, "terms": [{"index": [1, 2], "coeff": 1.5}, {"index": [3, 4], "coeff": -2}]})");
    const Covector c = covector_from_json(j);
    CHECK(c.coeff(MultiIndex({0, 1}, 4)) == 1.5);
    CHECK(c.coeff(MultiIndex({2, 3}, 4)) == -2.0);
    CHECK(covector_from_json(covector_to_json(c)).terms() == c.terms());
    CHECK_THROWS_AS(covector_from_json(Json::parse(R"({"m": 4, "k": 2, "terms": [{"index": [2, 1], "coeff": 1}]})")),
                    InputError);
    CHECK_THROWS_AS(covector_from_json(Json::parse(R"({"m": 4, "k": 2, "terms": [{"index": [0, 1], "coeff": 1}]})")),
                    InputError);
}

TEST_CASE("polyform JSON keeps rationals exact") {
    const Json j = Json::parse(R"({"m": 2, "k": 1, "terms": [
        {"index": [1], "poly": [{"exp": [0, 1], "num": "123456789012345678901234567890", "den": "7"}]},
        {"index": [2], "poly": [{"exp": [2, 0], "num": -3}]}]})");
    const PolyForm f = polyform_from_json(j);
    const Rational c = f.terms().begin()->second.terms().begin()->second;
    Rational expected("123456789012345678901234567890/7");
    expected.canonicalize();
    CHECK(c == expected);
    CHECK(polyform_from_json(polyform_to_json(f)) == f);
    CHECK_THROWS_AS(polyform_from_json(Json::parse(R"({"m": 2, "k": 1, "terms": [{"index": [1], "poly": [{"exp": [1], "num": "1"}]}]})")),
                    InputError);
    CHECK_THROWS_AS(polyform_from_json(Json::parse(R"({"m": 2, "k": 1, "terms": [{"index": [1], "poly": [{"exp": [1, 0], "num": "1", "den": "0"}]}]})")),
                    InputError);
}

TEST_CASE("points") {
    const auto a = parse_points("1 2\n3 4\n\n");
    REQUIRE(a.size() == 2);
    CHECK(a[1](0) == 3.0);
    const auto b = parse_points("[[1, 2], [3, 4]]");
    CHECK(b[1](1) == 4.0);
    CHECK_THROWS_AS(parse_points("1 2\n3"), InputError);
}

TEST_CASE("digest is FNV-1a 64") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
    CHECK(digest("foobar") == "85944171f73967e8");
}

TEST_CASE("report serializers are deterministic") {
    const SympContext ctx(2);
    const Matrix phi = random_eps_symplectic(2, 0.05, 9);
    Rng rng(2);
    std::vector<Matrix> es{random_ellipsoid(2, rng)};
    const std::string a = to_json(check_eps_nonexpanding(phi, 0.08, es, ctx)).dump();
    const std::string b = to_json(check_eps_nonexpanding(phi, 0.08, es, ctx)).dump();
    CHECK(a == b);
    const Json s = to_json(symplectify(phi, 0.06, FlowConfig{}, ctx));
    CHECK(s["pass"].get<bool>());
    CHECK(s["psi"]["rows"].size() == 4);
}
