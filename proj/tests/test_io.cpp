#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acm/io.hpp"

using namespace acm;

namespace {
const Fp kUnit(1, kDefaultPrime);
}

TEST_CASE("parse a well-formed file") {
    const std::string text =
        "# four points\n"
        "factors: 1 2\n"
        "prime: 32003\n"
        "seed: 42\n"
        "labels: a b c d\n"
        "point: 1 1 | 1 0 0\n"
        "point: 1 2 | 0 1 0\n"
        "point: 1 1 | 0 0 1\n"
        "point: 1 2 | 0 0 1\n";
    ConfigData d = parse_config(text);
    CHECK(d.shape == FactorShape({1, 2}));
    CHECK(d.points.size() == 4);
    CHECK(d.prime.value() == 32003);
    CHECK(d.seed.value() == 42);
    CHECK(d.labels == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(d.points[1][1] == std::vector<std::int64_t>{0, 1, 0});
    auto x = to_configuration(d, kUnit);
    CHECK(x.size() == 4);
}

TEST_CASE("serialization round trip") {
    ConfigData d;
    d.shape = FactorShape({1, 2});
    d.points = {{{1, 1}, {1, 0, 0}}, {{1, -2}, {0, 7, 3}}};
    d.prime = 32003;
    d.labels = {"p", "q"};
    ConfigData back = parse_config(serialize_config(d));
    CHECK(back.shape == d.shape);
    CHECK(back.points == d.points);
    CHECK(back.prime == d.prime);
    CHECK(back.labels == d.labels);
    // serialization is stable
    CHECK(serialize_config(back) == serialize_config(d));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_config("factors: 1 2\npoint: 1 1 | 1 0\n");
        FAIL("expected invariant_error");
    } catch (const invariant_error& e) {
        CHECK(e.line_no == 2);
        CHECK(std::string(e.what()).find("length") != std::string::npos);
    }

    try {
        parse_config("factors: 1 2\n\npoint: 1 1\n");
        FAIL("expected invariant_error");
    } catch (const invariant_error& e) {
        CHECK(e.line_no == 3);
    }

    CHECK_THROWS_AS(parse_config("points: 1\n"), parse_error);          // unknown key
    CHECK_THROWS_AS(parse_config("point: 1 1 | 1 0 0\n"), parse_error);  // factors must come first
    CHECK_THROWS_AS(parse_config("factors: 1 2\nfactors: 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_config("factors: a b\n"), parse_error);
    CHECK_THROWS_AS(parse_config(""), parse_error);
    CHECK_THROWS_AS(parse_config("factors: 0 2\n"), invariant_error);
    CHECK_THROWS_AS(parse_config("factors: 1 2\npoint: 0 0 | 1 0 0\n"), invariant_error);  // zero tuple
    CHECK_THROWS_AS(parse_config("factors: 1 2\nlabels: a b\npoint: 1 1 | 1 0 0\n"), invariant_error);
}

TEST_CASE("duplicate points are rejected at configuration build") {
    ConfigData d = parse_config("factors: 1 1\npoint: 1 1 | 1 2\npoint: 2 2 | 3 6\n");
    CHECK_THROWS_AS(to_configuration(d, kUnit), invariant_error);  // [2,2]=[1,1], [3,6]=[1,2]
}

TEST_CASE("fp_unit validates the prime") {
    CHECK(fp_unit(32003).prime() == 32003);
    CHECK_THROWS_AS(fp_unit(101), invariant_error);    // too small
    CHECK_THROWS_AS(fp_unit(32001), invariant_error);  // composite
}

TEST_CASE("report machine lines are order-stable") {
    Report r;
    r.kv("star", false);
    r.kv("n0", 2LL);
    r.kv("acm", std::string("true"));
    CHECK(r.machine_text() == "star=false\nn0=2\nacm=true\n");
}
