#include <doctest.h>

#include "covlab/errors.hpp"
#include "covlab/gen.hpp"
#include "covlab/instance.hpp"

using namespace covlab;

namespace {

const char* kDyn = R"({
  "schema_version": 1,
  "kind": "dynamical",
  "ground": 4,
  "bases": [[[0,1,2,3]], [[0,1],[2,3]]],
  "generators": [[1,0,3,2]]
})";

}  // namespace

TEST_CASE("parse and build a dynamical instance") {
  InstanceFile f = parse_instance(kDyn);
  CHECK(f.kind == InstanceKind::Dynamical);
  DynamicalInstance d = build_dynamical(f);
  CHECK(d.ground_size() == 4);
  CHECK(d.group().size() == 2);
}

TEST_CASE("schema errors name the offending path") {
  CHECK_THROWS_WITH_AS(parse_instance("{"), doctest::Contains("malformed"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"kind":"dynamical"})"),
                       doctest::Contains("$.schema_version"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"schema_version":1,"kind":"nope"})"),
                       doctest::Contains("$.kind"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"schema_version":1,"kind":"dynamical","ground":3,"bases":[[[0,"x"]]]})"),
      doctest::Contains("$.bases[0][0][1]"), ValidationError);

  InstanceFile f = parse_instance(
      R"({"schema_version":1,"kind":"dynamical","ground":3,"bases":[[[0,1,7]]]})");
  CHECK_THROWS_WITH_AS(build_structure(f), doctest::Contains("out of range"), ValidationError);

  InstanceFile g = parse_instance(
      R"({"schema_version":1,"kind":"dynamical","ground":3,"bases":[[[0,1],[1,2]]],"generators":[[0,0,1]]})");
  CHECK_THROWS_WITH_AS(build_dynamical(g), doctest::Contains("$.generators[0]"),
                       ValidationError);
}

TEST_CASE("metric and subshift payloads") {
  InstanceFile m = parse_instance(R"({
    "schema_version": 1, "kind": "metric", "size": 2,
    "distances": [["0/1","1/2"],["1/2","0/1"]],
    "radii": ["1/2","1/8"], "u_radius": "1/4"
  })");
  MetricSpace ms = build_metric(m);
  CHECK(ms.dist(0, 1) == Rat(1, 2));
  CHECK(build_radii(m).radii().size() == 2);

  InstanceFile bad = m;
  bad.distances[0][1] = "woof";
  CHECK_THROWS_WITH_AS(build_metric(bad), doctest::Contains("$.distances[0][1]"),
                       ValidationError);

  InstanceFile s = parse_instance(
      R"({"schema_version":1,"kind":"subshift","sft":[[1,1],[1,0]],"label":"gm"})");
  CHECK(build_subshift(s).alphabet_size() == 2);
  InstanceFile t = parse_instance(
      R"({"schema_version":1,"kind":"subshift","table":[2,3,"4",5]})");
  CHECK(count_words(build_subshift(t), 3) == 4);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"schema_version":1,"kind":"subshift"})"),
      doctest::Contains("exactly one of"), ValidationError);
}

TEST_CASE("save-load round trip is identity") {
  gen::Rng rng(808);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + rng.below(5);
    UniformStructure s = gen::random_chain(rng, n);
    std::vector<Perm> gens = gen::random_automorphisms(rng, s, 1 + rng.below(2));
    InstanceFile f = encode_dynamical(s, gens, "roundtrip");
    InstanceFile g = parse_instance(serialize_instance(f));
    CHECK(f == g);
    CHECK(serialize_instance(f) == serialize_instance(g));
  }

  MetricSpace circle = MetricSpace::circle_net(8);
  InstanceFile mf = encode_metric(circle, {Rat(1, 2), Rat(1, 8)}, {Perm::identity(8)}, "c8");
  InstanceFile mg = parse_instance(serialize_instance(mf));
  CHECK(mf == mg);
  CHECK(build_metric(mg).dist(0, 1) == circle.dist(0, 1));
}
