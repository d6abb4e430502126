#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "hopfkit/constructions.hpp"
#include "hopfkit/io.hpp"

using namespace hk;

TEST_CASE("comodalg.v1 round trip over the catalog") {
  const Field f = default_field();
  for (const auto& a : catalog()) {
    Json j = comodalg_to_json(a);
    CHECK(j["schema"] == "comodalg.v1");
    ComoduleAlgebra b = comodalg_from_json(Json::parse(j.dump()), f);
    CHECK_MESSAGE(b.alg.mult == a.alg.coerce(f).mult, a.name);
    CHECK(b.coaction == a.coaction.coerce(f));
    CHECK(check_comodule_algebra(b).ok());
    CHECK(comodalg_to_json(b).dump() == j.dump());
  }
}

TEST_CASE("hopf.v1 round trip") {
  const Field f = default_field();
  for (const char* ref : {"builtin:kp", "builtin:klein4", "builtin:sweedler"}) {
    HopfAlgebra h = load_hopf(ref, f);
    Json j = hopf_to_json(h);
    HopfAlgebra g = hopf_from_json(Json::parse(j.dump()), f);
    CHECK(check_hopf(g).ok());
    CHECK(g.antipode == h.antipode);
    CHECK(hopf_to_json(g).dump() == j.dump());
  }
}

TEST_CASE("extended fields survive serialization") {
  const Field f = adjoin_sqrt(default_field(), parse_scalar("1/2+1/2*i", default_field()));
  Json j = field_to_json(f);
  CHECK(j.dump() == R"({"cyclotomic":4,"sqrt":"1/2+1/2*i"})");
  Field g = field_from_json(j);
  CHECK(describe_field(g) == describe_field(f));

  ComoduleAlgebra a = catalog_entry("a_xy_i").coerce(f);
  a.alg.m(2, 2, 0) = Scalar::sqrt_generator(f) * a.alg.m(2, 2, 0);
  ComoduleAlgebra b = comodalg_from_json(comodalg_to_json(a), default_field());
  CHECK(b.alg.m(2, 2, 0) == a.alg.m(2, 2, 0));
}

TEST_CASE("references") {
  const Field f = default_field();
  CHECK(load_comodalg("catalog:ga_x", f).dim() == 2);
  CHECK(load_comodalg("builtin:kp", f).dim() == 8);
  CHECK(load_comodalg("builtin:klein4", f).dim() == 4);
  CHECK_THROWS_AS(load_comodalg("catalog:nope", f), Error);
  CHECK_THROWS_AS(load_hopf("builtin:nope", f), Error);
  CHECK_THROWS_AS(load_comodalg("/nonexistent/file.json", f), Error);

  const std::string path = "hopfkit_io_test.json";
  {
    std::ofstream out(path);
    out << comodalg_to_json(catalog_entry("kpsi")).dump(2);
  }
  CHECK(load_comodalg(path, f).dim() == 4);
  std::remove(path.c_str());
}

TEST_CASE("malformed input") {
  const Field f = default_field();
  Json j = algebra_to_json(catalog_entry("ga_x").alg);
  Json bad = j;
  bad["mult"][0]["k"] = 7;
  CHECK_THROWS_AS(algebra_from_json(bad, f), Error);
  bad = j;
  bad["mult"][0]["c"] = "1+";
  CHECK_THROWS_AS(algebra_from_json(bad, f), Error);
  bad = j;
  bad.erase("unit");
  CHECK_THROWS_AS(algebra_from_json(bad, f), Error);
  bad = comodalg_to_json(catalog_entry("ga_x"));
  bad["schema"] = "hopf.v1";
  CHECK_THROWS_AS(comodalg_from_json(bad, f), Error);
}
