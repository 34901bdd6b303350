#include "doctest.h"
#include "ordcopies/error.hpp"
#include "ordcopies/random.hpp"
#include "ordcopies/serialization.hpp"

using namespace ordcopies;
using nlohmann::json;

TEST_CASE("CubeSet schema") {
  json j = parse_json(R"({"dim": 1, "prefix": [1], "cycle": [0]})");
  CubeSet s = cube_set_from_json(j);
  CHECK(s.contains(Point{0}));
  CHECK_FALSE(s.contains(Point{1}));
  CHECK(to_json(s) == j);
  CHECK(to_json(CubeSet::full(2)) ==
        parse_json(R"({"dim":2,"prefix":[],"cycle":[{"dim":1,"prefix":[],"cycle":[1]}]})"));
  CHECK_THROWS_AS(cube_set_from_json(parse_json(R"({"dim": 1, "prefix": [], "cycle": []})")), ParseError);
  CHECK_THROWS_AS(cube_set_from_json(parse_json(R"({"dim": 2, "prefix": [1], "cycle": [0]})")), ParseError);
  CHECK_THROWS_AS(cube_set_from_json(parse_json(R"({"dim": 1, "prefix": [2], "cycle": [0]})")), ParseError);
  CHECK_THROWS_AS(cube_set_from_json(parse_json(R"({"dim": 1, "cycle": [0]})")), ParseError);
  CHECK_THROWS_AS(cube_set_from_json(to_json(CubeSet::full(5))), RepresentationLimit);
  CHECK(cube_set_from_json(to_json(CubeSet::full(5)), Limits{5, 5}) == CubeSet::full(5));
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("CubeSet round trip") {
  random::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    CubeSet s = random::cube_set(rng, random::uniform(rng, 0, 4));
    CHECK(cube_set_from_json(parse_json(to_json(s).dump())) == s);
  }
}

TEST_CASE("NatSet and FinCof schema") {
  CHECK(to_json(NatSet::from(2)) == parse_json(R"({"kind":"cofinite","exceptions":[0,1]})"));
  std::vector<std::uint64_t> xs{5};
  CHECK(to_json(NatSet::finite(xs)) == parse_json(R"({"kind":"finite","exceptions":[5]})"));
  NatSet evens = NatSet::periodic({}, {true, false});
  CHECK(to_json(evens) == parse_json(R"({"kind":"periodic","prefix":[],"cycle":[1,0]})"));
  CHECK(nat_set_from_json(to_json(evens)) == evens);
  CHECK(nat_set_from_json(parse_json(R"({"kind":"cofinite","exceptions":[3]})")).contains(4));
  CHECK_THROWS_AS(nat_set_from_json(parse_json(R"({"kind":"sparse"})")), ParseError);
}

TEST_CASE("LayeredSet schema") {
  LayeredSet full = layered_set_from_json(parse_json(R"({"prefix": [], "tail": "full"})"));
  CHECK(full == LayeredSet::full());
  CHECK(to_json(full) == parse_json(R"({"prefix":[],"tail":"full"})"));
  CHECK(to_json(LayeredSet::empty()) == parse_json(R"({"prefix":[],"tail":"empty"})"));
  LayeredSet a = layered_set_from_json(parse_json(
      R"({"prefix": [{"dim":1,"prefix":[1],"cycle":[0]}], "tail": {"kind":"periodic","prefix":[],"cycle":[0,1]}})"));
  CHECK(a.column(0).contains(Point{0}));
  CHECK(a.column(3) == CubeSet::full(4));
  CHECK(a.column(2) == CubeSet::empty(3));
  CHECK(layered_set_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(layered_set_from_json(parse_json(R"({"prefix": [{"dim":2,"prefix":[],"cycle":[{"dim":1,"prefix":[],"cycle":[1]}]}], "tail": "empty"})")),
                  ParseError);
  CHECK_THROWS_AS(layered_set_from_json(parse_json(R"({"prefix": [], "tail": "half"})")), ParseError);
  random::Rng rng(62);
  for (int i = 0; i < 50; ++i) {
    LayeredSet s = random::layered_set(rng);
    CHECK(layered_set_from_json(to_json(s)) == s);
  }
}

TEST_CASE("points") {
  CHECK(point_from_json(parse_json("[3, 5]")) == Point{3, 5});
  CHECK_THROWS_AS(point_from_json(parse_json("[-1]")), ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json("{}")), ParseError);
}
