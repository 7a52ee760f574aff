#include <doctest.h>

#include "nccube/io.hpp"
#include "nccube/rng.hpp"

using namespace nccube;

TEST_CASE("json float emission round-trips doubles") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const double v = rng.gaussian() * std::pow(10.0, rng.uniformInt(20) - 10);
        const std::string s = formatDouble(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(formatDouble(0.1) == "0.10000000000000001");
}

TEST_CASE("element json round trip") {
    Rng rng(5);
    TensorElement x = TensorElement::zero({SystemKind::NCCube, 2}, 2);
    x.setCoeff("1", rng.gaussianHermitian(2).mat());
    x.setCoeff("h1", rng.gaussianHermitian(2).mat());
    x.setCoeff("h2", rng.gaussianHermitian(2).mat());
    const Json j = elementToJson(x);
    const std::string text = dumpJson(j);
    const TensorElement y = elementFromJson(Json::parse(text));
    CHECK(x.distance(y) == 0.0);  // 17 significant digits round-trip exactly
    CHECK(dumpJson(elementToJson(y)) == text);
}

TEST_CASE("loader validation") {
    SUBCASE("asymmetric Hermitian block rejected") {
        Json j;
        j["format"] = 1;
        j["system"] = "NC";
        j["n"] = 1;
        j["k"] = 1;
        j["coeffs"]["1"] = Json::array({Json::array({Json::array({1.0, 0.5})})});
        CHECK_THROWS_AS(elementFromJson(j), InvalidInput);  // 1x1 with imaginary part
    }
    SUBCASE("small asymmetry is symmetrised") {
        Json j;
        j["format"] = 1;
        j["system"] = "NC";
        j["n"] = 1;
        j["k"] = 1;
        j["coeffs"]["1"] = Json::array({Json::array({Json::array({1.0, 1e-10})})});
        const TensorElement x = elementFromJson(j);
        CHECK(x.coeff("1")(0, 0).imag() == 0.0);
    }
    SUBCASE("unknown label rejected") {
        Json j;
        j["format"] = 1;
        j["system"] = "NC";
        j["n"] = 1;
        j["k"] = 1;
        j["coeffs"]["h7"] = Json::array({Json::array({Json::array({1.0, 0.0})})});
        CHECK_THROWS_AS(elementFromJson(j), InvalidInput);
    }
    SUBCASE("wrong format version rejected") {
        Json j;
        j["format"] = 2;
        j["system"] = "NC";
        j["n"] = 1;
        j["k"] = 1;
        j["coeffs"] = Json::object();
        CHECK_THROWS_AS(elementFromJson(j), InvalidInput);
    }
    SUBCASE("tridiagonal off-pair adjointness enforced") {
        Json j;
        j["format"] = 1;
        j["system"] = "T";
        j["n"] = 1;
        j["k"] = 1;
        j["coeffs"]["E_1_2"] = Json::array({Json::array({Json::array({1.0, 0.0})})});
        j["coeffs"]["E_2_1"] = Json::array({Json::array({Json::array({2.0, 0.0})})});
        CHECK_THROWS_AS(elementFromJson(j), InvalidInput);
        j["coeffs"]["E_2_1"] = Json::array({Json::array({Json::array({1.0, 0.0})})});
        CHECK_NOTHROW(elementFromJson(j));
    }
}

TEST_CASE("deterministic dump of nested structures") {
    Json j;
    j["b"] = 1;
    j["a"] = Json::array({1.5, -2.25, 3});
    j["nested"] = Json{{"x", 0.1}};
    const std::string s1 = dumpJson(j);
    const std::string s2 = dumpJson(j);
    CHECK(s1 == s2);
    // insertion order preserved
    CHECK(s1.find("\"b\"") < s1.find("\"a\""));
}
