#include <doctest.h>

#include "preproj/quiver.hpp"
#include "preproj/weight.hpp"

using namespace preproj;

TEST_CASE("D_inf arrows") {
  Quiver d = Quiver::d_infinity();
  CHECK(d.is_arrow({0, 2}));
  CHECK(d.is_arrow({1, 2}));
  CHECK(d.is_arrow({2, 3}));
  CHECK_FALSE(d.is_arrow({0, 1}));
  CHECK(d.neighbors(2).size() == 3);
  CHECK(d.cartan(0, 1) == 0);
}

TEST_CASE("explicit quivers") {
  Quiver one = Quiver::explicit_quiver({7}, {});
  CHECK(one.is_vertex(7));
  CHECK_FALSE(one.is_vertex(0));
  CHECK(one.cartan(7, 7) == 2);

  Quiver loop = Quiver::explicit_quiver({0}, {{0, 0}});
  CHECK(loop.has_loop(0));
  CHECK(loop.cartan(0, 0) == 0);

  Quiver par = Quiver::explicit_quiver({0, 1}, {{0, 1}, {0, 1}});
  CHECK(par.arrows_out(0).size() == 2);
  CHECK(par.cartan(0, 1) == -2);

  CHECK_THROWS_AS(Quiver::explicit_quiver({0}, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(Quiver::explicit_quiver({0, 0}, {}), ValidationError);
  CHECK_THROWS_AS(Quiver::a_plus_infinity().require_vertex(-1), ValidationError);
}

TEST_CASE("Ringel form") {
  Quiver a = Quiver::a_plus_infinity();
  CHECK(ringel_form(a, DimVector::unit(0), DimVector::unit(0)) == 1);
  CHECK(ringel_form(a, DimVector::unit(0), DimVector::unit(1)) == -1);
  CHECK(ringel_form(a, DimVector::unit(1), DimVector::unit(0)) == 0);
  Quiver d = Quiver::d_infinity();
  CHECK(ringel_form(d, DimVector{{0, 1}, {1, 1}}, DimVector::unit(2)) == -2);
}

TEST_CASE("symmetrized form") {
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::a_infinity(), Quiver::d_infinity()})
    for (Vertex i = 0; i < 6; ++i) CHECK(symmetrized_form(q, DimVector::unit(i), DimVector::unit(i)) == 2);
  CHECK(symmetrized_form(Quiver::a_plus_infinity(), DimVector::unit(0), DimVector::unit(1)) == -1);
  CHECK(symmetrized_form(Quiver::d_infinity(), DimVector::unit(0), DimVector::unit(1)) == 0);
  CHECK(symmetrized_form(Quiver::a_infinity(), DimVector::unit(-3), DimVector::unit(-2)) == -1);
}

TEST_CASE("Cartan action") {
  Weight w = cartan_apply(Quiver::a_plus_infinity(), DimVector::unit(1));
  CHECK(w[0] == Scalar(-1));
  CHECK(w[1] == Scalar(2));
  CHECK(w[2] == Scalar(-1));
  CHECK(w[3] == Scalar(0));
  Weight d = cartan_apply(Quiver::d_infinity(), DimVector::unit(2));
  CHECK(d[0] == Scalar(-1));
  CHECK(d[1] == Scalar(-1));
  CHECK(d[2] == Scalar(2));
  CHECK(d[3] == Scalar(-1));
}

TEST_CASE("kernel prefixes") {
  CHECK(delta_prefix(Quiver::a_plus_infinity(), 4) == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(delta_prefix(Quiver::a_infinity(), 4) == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(delta_prefix(Quiver::d_infinity(), 5) == std::vector<std::int64_t>{1, 1, 2, 2, 2});
}

TEST_CASE("connected hull") {
  Quiver d = Quiver::d_infinity();
  CHECK(d.connected_hull({0, 1}) == std::set<Vertex>{0, 1, 2});
  CHECK(d.connected_hull({0, 4}) == std::set<Vertex>{0, 2, 3, 4});
  CHECK(Quiver::a_infinity().connected_hull({-2, 1}) == std::set<Vertex>{-2, -1, 0, 1});
  CHECK_FALSE(d.is_connected({0, 1}));
  CHECK(d.is_connected({0, 1, 2}));
}

TEST_CASE("double arrow names") {
  DoubleArrow a{{2, 3}, false};
  CHECK(a.name() == "a_2_3");
  CHECK(a.dual().name() == "astar_2_3");
  CHECK(DoubleArrow::parse("astar_2_3") == a.dual());
  CHECK(a.dual().tail() == 3);
  CHECK_THROWS_AS(DoubleArrow::parse("b_1_2"), ValidationError);
}
