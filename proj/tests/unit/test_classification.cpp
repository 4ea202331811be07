#include <doctest.h>

#include "generators.hpp"
#include "preproj/classification.hpp"
#include "preproj/oracle.hpp"

using namespace preproj;

TEST_CASE("p values") {
  Quiver a = Quiver::a_plus_infinity();
  CHECK(p_value(a, DimVector{{0, 2}}) == -3);
  CHECK(p_value(a, DimVector::interval(0, 3)) == 0);
  CHECK(p_value(a, DimVector{{0, 1}, {1, 2}, {2, 1}}) == -1);
  Quiver loop = Quiver::explicit_quiver({0}, {{0, 0}});
  CHECK(p_value(loop, DimVector{{0, 2}}) == 1);
}

TEST_CASE("simple on an interval") {
  Quiver a = Quiver::a_plus_infinity();
  auto yes = exists_simple(a, Weight::explicit_values({-1, 1}), DimVector::interval(0, 1));
  CHECK(yes.exists);
  CHECK(yes.reason == SimpleReason::Simple);
  CHECK(yes.window == std::set<Vertex>{0, 1});
  REQUIRE(yes.edge_scalars.size() == 1);
  CHECK(yes.edge_scalars[0].value == Scalar(1));

  auto no = exists_simple(a, Weight::zero(), DimVector::interval(0, 1));
  CHECK_FALSE(no.exists);
  CHECK(no.reason == SimpleReason::Blocked);
  CHECK(no.decomposition.size() == 2);

  auto off = exists_simple(a, Weight::explicit_values({1, 1}), DimVector::interval(0, 1));
  CHECK(off.reason == SimpleReason::PairingNonzero);
  CHECK(off.pairing == Scalar(2));

  auto nr = exists_simple(a, Weight::zero(), DimVector{{0, 2}});
  CHECK(nr.reason == SimpleReason::NotARoot);
  CHECK(reason_name(SimpleReason::Blocked) == "blocking_decomposition");
}

TEST_CASE("bad dimension vectors") {
  CHECK_THROWS_AS(exists_simple(Quiver::a_plus_infinity(), Weight::zero(), DimVector{}), ValidationError);
  CHECK_THROWS_AS(exists_simple(Quiver::a_plus_infinity(), Weight::zero(), DimVector{{0, -1}}), ValidationError);
  CHECK_THROWS_AS(interval_conditions(Quiver::d_infinity(), Weight::zero(), 0, 1), ValidationError);
}

TEST_CASE("interval conditions") {
  Quiver a = Quiver::a_plus_infinity();
  CHECK(interval_conditions(a, Weight::explicit_values({-1, 1}), 0, 1));
  CHECK_FALSE(interval_conditions(a, Weight::zero(), 0, 1));
  CHECK(interval_conditions(a, Weight::zero(), 3, 3));
}

TEST_CASE("enumeration at zero weight") {
  auto all = enumerate_simples(Quiver::a_plus_infinity(), Weight::zero(), {0, 1});
  REQUIRE(all.size() == 2);
  CHECK(all[0].alpha == DimVector::unit(0));
  CHECK(all[1].alpha == DimVector::unit(1));
}

TEST_CASE("threaded enumeration matches serial") {
  testgen::Gen g(8);
  for (int t = 0; t < 10; ++t) {
    std::set<Vertex> w{0, 1, 2, 3, 4};
    Weight l = testgen::random_weight(g, w);
    auto a = enumerate_simples(Quiver::d_infinity(), l, w, 1);
    auto b = enumerate_simples(Quiver::d_infinity(), l, w, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].alpha == b[k].alpha);
  }
}

TEST_CASE("type A agrees with the interval rule and the oracle") {
  testgen::Gen g(99);
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::a_infinity()})
    for (int t = 0; t < 60; ++t) {
      Vertex lo = q.kind() == Family::A_inf ? -2 : 0;
      std::set<Vertex> w;
      for (Vertex v = lo; v < lo + 5; ++v) w.insert(v);
      Weight l = testgen::random_weight(g, w);
      Vertex s = g.integer(lo, lo + 4), r = g.integer(s, lo + 4);
      if (g.coin()) l = testgen::balance(l, DimVector::interval(s, r), r);
      DimVector alpha = DimVector::interval(s, r);
      bool e = exists_simple(q, l, alpha).exists;
      CHECK(e == interval_conditions(q, l, s, r));
      CHECK(e == oracle_exists_simple(q, l, alpha));
    }
}

TEST_CASE("D_inf agrees with the oracle on multiplicity-free roots") {
  testgen::Gen g(123);
  Quiver d = Quiver::d_infinity();
  std::set<Vertex> w{0, 1, 2, 3, 4};
  auto roots = testgen::multiplicity_free(enumerate_positive_roots(d, w));
  for (int t = 0; t < 100; ++t) {
    const auto& alpha = g.pick(roots);
    Weight l = testgen::random_weight(g, w);
    if (g.coin(0.7)) l = testgen::balance(l, alpha, g.pick(alpha.support()));
    CHECK(exists_simple(d, l, alpha).exists == oracle_exists_simple(d, l, alpha));
  }
}
