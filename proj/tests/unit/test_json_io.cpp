#include <doctest.h>

#include "generators.hpp"
#include "preproj/json_io.hpp"

using namespace preproj;
using io::json;

TEST_CASE("scalars") {
  Scalar s(Rational(-3, 4), Rational(5));
  CHECK(io::to_json(s) == json::array({-3, 4, 5, 1}));
  CHECK(io::scalar_from_json(io::to_json(s)) == s);
  CHECK(io::scalar_from_json("1/2-3i") == Scalar(Rational(1, 2), Rational(-3)));
  CHECK(io::scalar_from_json(7) == Scalar(7));
  CHECK(io::scalar_from_json(json::array({"123456789012345678901234567890", "1", "0", "1"})).re() ==
        Rational("123456789012345678901234567890"));
  CHECK_THROWS_AS(io::scalar_from_json(json::array({1, 0, 0, 1})), ValidationError);
  CHECK_THROWS_AS(io::scalar_from_json(json::array({1, 2})), ValidationError);
  CHECK_THROWS_AS(io::scalar_from_json(1.5), ValidationError);
}

TEST_CASE("matrices") {
  Matrix m = Matrix::from_rows({{1, 2}, {3, Scalar::i()}});
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  Matrix e(0, 3);
  CHECK(io::matrix_from_json(io::to_json(e)).cols() == 3);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"shape", {1, 2}}, {"entries", {{1}}}}), ValidationError);
}

TEST_CASE("quivers") {
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::a_infinity(), Quiver::d_infinity(),
                   Quiver::explicit_quiver({0, 1, 2}, {{0, 1}, {2, 1}})})
    CHECK(io::quiver_from_json(io::to_json(q)) == q);
  CHECK(io::quiver_from_json("D_inf") == Quiver::d_infinity());
  CHECK_THROWS_AS(io::quiver_from_json(json{{"family", "E_inf"}}), ValidationError);
  json objs = json::parse(R"({"family":"explicit","vertices":[0,1],"arrows":[{"tail":0,"head":1}]})");
  CHECK(io::quiver_from_json(objs) == Quiver::explicit_quiver({0, 1}, {{0, 1}}));
}

TEST_CASE("weights") {
  std::set<Vertex> w{-2, -1, 0, 1, 2, 3};
  Weight e = Weight::explicit_values({1, Scalar(Rational(1, 2)), Scalar::i()}, -1).with(3, 9);
  CHECK(io::weight_from_json(io::to_json(e)).equal_on(e, w));
  Weight k = Weight::khare(CasimirPolynomial({1, -2})).with(0, 5);
  CHECK(io::weight_from_json(io::to_json(k)).equal_on(k, w));
  CHECK(io::weight_from_json(json{{"base", "zero"}}).equal_on(Weight::zero(), w));
  CHECK_THROWS_AS(io::weight_from_json(json{{"base", "mystery"}}), ValidationError);
  json nested = json::parse(R"({"base":{"kind":"explicit","start":-1,"values":[1,"1/2","i"]},"patch":{"3":9}})");
  CHECK(io::weight_from_json(nested).equal_on(e, w));
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"base":"zero","patch":{"x":1}})")), ValidationError);
}

TEST_CASE("dimension vectors") {
  DimVector d{{-1, 2}, {4, 1}};
  CHECK(io::dimvector_from_json(io::to_json(d)) == d);
  CHECK(io::to_json(d) == json::parse("[[-1,2],[4,1]]"));
}

TEST_CASE("modules round trip") {
  testgen::Gen g(31);
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::d_infinity()})
    for (int t = 0; t < 15; ++t) {
      auto inst = testgen::random_instance(g, q, {0, 1, 2, 3}, static_cast<int>(g.integer(1, 2)));
      json j = io::to_json(inst.module, inst.lambda, inst.nu);
      auto doc = io::module_from_json(json::parse(j.dump()));
      CHECK(doc.module.components() == inst.module.components());
      CHECK(doc.module.arrows() == inst.module.arrows());
      CHECK(doc.module.sigmas() == inst.module.sigmas());
      REQUIRE(doc.nu.has_value());
      CHECK(*doc.nu == inst.nu);
      CHECK(doc.weight->equal_on(inst.lambda, {0, 1, 2, 3}));
    }
}

TEST_CASE("module schema errors") {
  json base = json::parse(R"({"quiver":{"family":"A_plus_inf"},"rank":1,
    "components":[{"tuple":[0],"dim":1},{"tuple":[1],"dim":1}],
    "arrows":[{"tuple":[0],"position":1,"arrow":"a_0_1","matrix":{"shape":[1,1],"entries":[[1]]}}]})");
  CHECK_NOTHROW(io::module_from_json(base));
  json bad_pos = base;
  bad_pos["arrows"][0]["position"] = 2;
  CHECK_THROWS_AS(io::module_from_json(bad_pos), ValidationError);
  json bad_arrow = base;
  bad_arrow["arrows"][0]["arrow"] = "a_0_2";
  CHECK_THROWS_AS(io::module_from_json(bad_arrow), ValidationError);
  json no_quiver = base;
  no_quiver.erase("quiver");
  CHECK_THROWS_AS(io::module_from_json(no_quiver), ValidationError);
  json wrong_rank = base;
  wrong_rank["rank"] = 2;
  CHECK_THROWS_AS(io::module_from_json(wrong_rank), ValidationError);
  // rank defaults to 1
  json no_rank = base;
  no_rank.erase("rank");
  CHECK(io::module_from_json(no_rank).module.rank() == 1);
}

TEST_CASE("report output") {
  CheckReport r;
  r.add("I", "(0)", Matrix::of(1));
  json j = io::to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["violations"][0]["relation"] == "I");
}
