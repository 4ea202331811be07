#include <doctest.h>

#include "generators.hpp"
#include "preproj/reflection.hpp"
#include "preproj/wreath_induction.hpp"

using namespace preproj;

namespace {

const std::set<Vertex> kWide{-3, -2, -1, 0, 1, 2, 3, 4, 5, 6};

WreathRep chain01() {
  auto sol = solve_chain(Quiver::a_plus_infinity(), Weight::explicit_values({-1, 1}), 0, 1);
  return to_wreath(sol->rep);
}

DimVector rank1_dims(const WreathRep& v) { return to_rank1(v).dims(); }

}  // namespace

TEST_CASE("Lambda membership") {
  Scalar nu(1);
  CHECK_FALSE(in_lambda_i(Weight::zero().with(0, nu), nu, 0, 2));
  CHECK(in_lambda_i(Weight::zero().with(0, nu), nu, 0, 1));
  CHECK(in_lambda_i(Weight::zero().with(0, 3), nu, 0, 3));
  CHECK_FALSE(in_lambda_i(Weight::zero(), nu, 0, 1));
}

TEST_CASE("reflecting a two-vertex simple") {
  Weight l = Weight::explicit_values({-1, 1});
  auto r1 = reflect(chain01(), l, 0, 1);
  CHECK(rank1_dims(r1.module) == DimVector::unit(0));
  CHECK(r1.weight.equal_on(Weight::explicit_values({0, -1, 1}), kWide));
  CHECK(check_wreath(r1.module, r1.weight, 0).pass());

  auto r0 = reflect(chain01(), l, 0, 0);
  CHECK(rank1_dims(r0.module) == DimVector::unit(1));
  CHECK(check_wreath(r0.module, r0.weight, 0).pass());

  auto back = reflect(r1.module, r1.weight, 0, 1);
  CHECK(back.weight.equal_on(l, kWide));
  CHECK(is_isomorphic(back.module, chain01(), l, 0).isomorphic);
}

TEST_CASE("word order is rightmost first") {
  Weight l = Weight::explicit_values({-1, 1});
  Quiver q = Quiver::a_plus_infinity();
  auto w = reflect_word(chain01(), l, 0, {0, 1});
  CHECK(w.weight.equal_on(dual_reflection(q, 0, dual_reflection(q, 1, l)), kWide));
  // F_1 gives S(0) at λ_0 = 0, so F_0 is applied outside Λ_0 and kills it
  CHECK(w.outside_lambda == std::vector<Vertex>{0});
  CHECK(w.module.components().empty());
  auto v = reflect_word(chain01(), l, 0, {1, 0});
  CHECK(v.outside_lambda == std::vector<Vertex>{1});
  auto u = reflect_word(chain01(), l, 0, {2, 1});
  CHECK(u.outside_lambda.empty());
  CHECK(rank1_dims(u.module) == DimVector::unit(0));
}

TEST_CASE("reflect rejects bad input") {
  CHECK_THROWS_AS(reflect(chain01(), Weight::zero(), 0, 0), ValidationError);
  Quiver loop = Quiver::explicit_quiver({0, 1}, {{0, 0}, {0, 1}});
  WreathRep p(loop, 1, {{{1}, 1}}, {}, {});
  CHECK_THROWS_AS(reflect(p, Weight::zero(), 0, 0), ValidationError);
  CHECK_NOTHROW(reflect(p, Weight::zero(), 0, 1));
}

TEST_CASE("rank two with nonzero nu") {
  Quiver q = Quiver::a_plus_infinity();
  Scalar nu(Rational(1, 2));
  for (const auto& d : {YoungDiagram({2}), YoungDiagram({1, 1})}) {
    auto [a, b] = *is_rectangular(d);
    Weight l = Weight::zero().with(1, nu * Scalar(static_cast<long>(a - b))).with(0, 5).with(2, 3);
    WreathRep v = zero_arrow_module(q, {2}, {d}, {1});
    REQUIRE(check_wreath(v, l, nu).pass());
    for (Vertex i : {0, 2}) {
      REQUIRE(in_lambda_i(l, nu, i, 2));
      auto r = reflect(v, l, nu, i);
      CHECK(check_wreath(r.module, r.weight, nu).pass());
      auto back = reflect(r.module, r.weight, nu, i);
      CHECK(back.module.total_dim() == v.total_dim());
      CHECK(is_isomorphic(back.module, v, l, nu).isomorphic);
    }
  }
}

TEST_CASE("dimension vectors transform by simple reflections") {
  testgen::Gen g(77);
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::d_infinity()})
    for (int t = 0; t < 30; ++t) {
      auto [rep, l] = testgen::random_simple(g, q, {0, 1, 2, 3});
      Vertex i = g.integer(0, 3);
      if (l[i].is_zero() || rep.dims() == DimVector::unit(i)) continue;
      auto r = reflect(to_wreath(rep), l, 0, i);
      CHECK(rank1_dims(r.module) == simple_reflection(q, i, rep.dims()));
    }
}

TEST_CASE("random instances stay valid") {
  testgen::Gen g(2024);
  for (Quiver q : {Quiver::a_plus_infinity(), Quiver::a_infinity(), Quiver::d_infinity()})
    for (int t = 0; t < 15; ++t) {
      auto inst = testgen::random_instance(g, q, {0, 1, 2, 3}, static_cast<int>(g.integer(1, 2)));
      for (Vertex i = 0; i < 4; ++i) {
        auto r = reflect(inst.module, inst.lambda, inst.nu, i);
        CHECK(check_wreath(r.module, r.weight, inst.nu).pass());
      }
    }
}
