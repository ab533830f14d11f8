#include <doctest.h>

#include <random>

#include "bredon/builtin.hpp"
#include "bredon/error.hpp"
#include "bredon/io.hpp"
#include "oracle.hpp"

using namespace bredon;

namespace {

const std::filesystem::path data_dir = BREDON_TEST_DATA;

std::string parse_error_of(const std::filesystem::path& file)
{
    try {
        parse_complex(file);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("complex round trip over the corpus")
{
    for (const auto& name : builtin_corpus()) {
        CAPTURE(name);
        const GCWComplex x = parse_builtin(name);
        const Json j = to_json(x);
        const GCWComplex back = complex_from_json(Json::parse(dump(j)));
        CHECK(back == x);
        CHECK(dump(to_json(back)) == dump(j));
    }
}

TEST_CASE("parsing canonicalizes boundary data")
{
    const Json messy = Json::parse(R"({
      "group": {"p": 2, "n": 1},
      "basepoint": {"dim": 0, "index": 0},
      "cells": [[{"stab": 1}, {"stab": 1}], [{"stab": 0}]],
      "boundary": [
        {"dim": 1, "from": 0, "to": 1, "terms": [{"rep": 0, "coeff": -2}, {"rep": 0, "coeff": 1}]},
        {"dim": 1, "from": 0, "to": 0, "terms": [{"rep": 0, "coeff": 1}]},
        {"dim": 1, "from": 0, "to": 0, "terms": [{"rep": 0, "coeff": 0}]}
      ]
    })");
    const GCWComplex x = complex_from_json(messy);
    CHECK(x == parse_builtin("C2:sigma"));
    CHECK(parse_complex(data_dir / "sigma_c2.json") == x);
}

TEST_CASE("schema errors name the field")
{
    const std::string stab = parse_error_of(data_dir / "bad_stab.json");
    CHECK(stab.find("cells[1][0].stab") != std::string::npos);
    const std::string rep = parse_error_of(data_dir / "bad_rep.json");
    CHECK(rep.find("boundary[0].terms[0].rep") != std::string::npos);
    const std::string syntax = parse_error_of(data_dir / "syntax_error.json");
    CHECK(syntax.find("line") != std::string::npos);
    CHECK_FALSE(parse_error_of(data_dir / "missing.json").empty());

    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"group": {"p": 4, "n": 1}, "cells": []})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"group": {"p": 2, "n": 1}})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"group": {"p": 2, "n": 1}, "cells": [[{"stab": 0}]],
                                                      "basepoint": {"dim": 0, "index": 3}})")),
                    ParseError);
}

TEST_CASE("invalid but well-formed complexes load and fail validation")
{
    const GCWComplex bad = parse_complex(data_dir / "badcomplex.json");
    const auto v = validate_complex(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message == "ddboundary nonzero at block (d=2, cell 0 → cell 1)");
}

TEST_CASE("coefficient system round trip")
{
    std::mt19937 rng(13);
    std::vector<CoefficientSystem> systems{constant_system(GroupSpec(2, 2)), zero_system(GroupSpec(3, 1)),
                                           parse_system(data_dir / "sign_c2.json")};
    for (const auto& [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {2u, 3u}})
        for (int i = 0; i < 3; ++i)
            systems.push_back(oracle::random_system(GroupSpec(p, n), rng));
    for (const auto& m : systems) {
        const Json j = to_json(m);
        const CoefficientSystem back = system_from_json(Json::parse(dump(j)));
        CHECK(back == m);
        CHECK(dump(to_json(back)) == dump(j));
    }
    const CoefficientSystem swap = parse_system(data_dir / "swap_c2.json");
    CHECK(swap.dims() == std::vector<std::size_t>{2, 1});
    CHECK_FALSE(validate_system(swap));
    CHECK(validate_system(parse_system(data_dir / "bad_system.json")));
}

TEST_CASE("system schema errors")
{
    CHECK_THROWS_WITH_AS(system_from_json(Json::parse(R"({"group": {"p": 2, "n": 1}, "dims": [1, 1],
        "weyl": [[["1"]], [["x"]]], "restrictions": [[["1"]]]})")),
                         doctest::Contains("weyl[1][0][0]"), ParseError);
    CHECK_THROWS_WITH_AS(system_from_json(Json::parse(R"({"group": {"p": 2, "n": 1}, "dims": [1, 1],
        "weyl": [[["1"]], [["1"]]], "restrictions": [[["1", "2"]]]})")),
                         doctest::Contains("restrictions[0][0]"), ParseError);
    CHECK_THROWS_AS(system_from_json(Json::parse(R"({"group": {"p": 2, "n": 1}, "dims": [1],
        "weyl": [], "restrictions": []})")),
                    ParseError);
    CHECK(system_from_json(Json::parse(R"({"group": {"p": 2, "n": 0}, "dims": [1],
        "weyl": [[[1]]], "restrictions": []})")) == constant_system(GroupSpec(2, 0)));
}

TEST_CASE("output shapes")
{
    const GCWComplex s = parse_builtin("C2:sigma");
    const auto table = cohomology_table(s, constant_system(s.group()), "constant-Q", all_levels(s.group()), false);
    CHECK(dump(to_json(table)) ==
          R"({
  "levels": [
    {
      "P": 1,
      "dims": [
        1,
        0
      ]
    },
    {
      "P": 0,
      "dims": [
        1,
        1
      ]
    }
  ],
  "reduced": false,
  "coefficients": "constant-Q"
}
)");
    const Json d = to_json(mapping_decomposition(s, 5));
    CHECK(d.dump() == R"({"m":5,"r":1,"factors":[{"degree":4,"values":{"P0":1,"P1":0}}],"reduced":true})");
    const Json v = to_json(lgood_check(parse_builtin("C2:trivial-sphere(2)")));
    CHECK(v.dump() == R"({"outcome":"necessary-condition-holds","witness":null,"k":2,"dims":[1,0,1]})");
}
