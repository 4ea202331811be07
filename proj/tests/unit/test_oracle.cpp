#include <doctest.h>

#include "preproj/oracle.hpp"

using namespace preproj;

TEST_CASE("two-vertex chain") {
  auto sol = solve_chain(Quiver::a_plus_infinity(), Weight::explicit_values({-1, 1}), 0, 1);
  REQUIRE(sol.has_value());
  REQUIRE(sol->u.size() == 1);
  CHECK(sol->u[0] == Scalar(1));
  CHECK(check_rank1(sol->rep, Weight::explicit_values({-1, 1})).pass());
}

TEST_CASE("chain fails when a partial sum vanishes") {
  CHECK_FALSE(solve_chain(Quiver::a_plus_infinity(), Weight::explicit_values({1, -1, 0}), 0, 2));
  CHECK_FALSE(solve_chain(Quiver::a_plus_infinity(), Weight::explicit_values({1, 1}), 0, 1));
  auto one = solve_chain(Quiver::a_infinity(), Weight::zero(), -4, -4);
  REQUIRE(one.has_value());
  CHECK(one->u.empty());
}

TEST_CASE("D_inf tree flow") {
  Quiver d = Quiver::d_infinity();
  DimVector alpha{{0, 1}, {1, 1}, {2, 1}};
  CHECK(oracle_exists_simple(d, Weight::explicit_values({1, 1, -2}), alpha));
  CHECK_FALSE(oracle_exists_simple(d, Weight::explicit_values({0, 1, -1}), alpha));
  auto flow = solve_tree_flow(d, Weight::explicit_values({1, 1, -2}), alpha);
  REQUIRE(flow.has_value());
  CHECK(flow->u.size() == 2);
  CHECK(check_rank1(flow->rep, Weight::explicit_values({1, 1, -2})).pass());
}

TEST_CASE("complex weights") {
  Scalar i = Scalar::i();
  Weight l = Weight::explicit_values({i, -i});
  auto sol = solve_chain(Quiver::a_plus_infinity(), l, 0, 1);
  REQUIRE(sol.has_value());
  CHECK(check_rank1(sol->rep, l).pass());
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(oracle_exists_simple(Quiver::a_plus_infinity(), Weight::zero(), DimVector{{0, 2}}), DomainError);
  CHECK_FALSE(oracle_exists_simple(Quiver::a_plus_infinity(), Weight::zero(), DimVector{{0, 1}, {2, 1}}));
  CHECK_THROWS_AS(solve_chain(Quiver::d_infinity(), Weight::zero(), 0, 1), ValidationError);
}
