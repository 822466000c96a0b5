#include "doctest.h"

#include "chambrier/linalg.hpp"

using namespace chambrier;

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(-22, 7)) == "-22/7");
  CHECK(rat_from_string("5/10") == Rat(1, 2));
  CHECK(rat_from_string("-4") == Rat(-4));
  CHECK_THROWS_AS(rat_from_string("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(6, 3)) == 2);
  CHECK(ceil_rat(Rat(6, 3)) == 2);
  CHECK(floor_rat(Rat(0)) == 0);
}

TEST_CASE("primitive normalization") {
  RatVec v = {Rat(-2, 3), Rat(4, 9), Rat(0)};
  IntVec s = primitive_signed(v);
  CHECK(s == IntVec{-3, 2, 0});
  IntVec u = primitive_unsigned(v);
  CHECK(u == IntVec{3, -2, 0});
  CHECK(primitive_unsigned(RatVec{Rat(0), Rat(0)}) == IntVec{0, 0});
}

TEST_CASE("rref and rank") {
  Mat a = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(rank_of(a) == 2);
  std::vector<size_t> p = rref(a);
  CHECK(p == std::vector<size_t>{0, 1});
  CHECK(a.size() == 2);
  CHECK(a[0] == RatVec{Rat(1), Rat(0), Rat(1)});
  CHECK(a[1] == RatVec{Rat(0), Rat(1), Rat(1)});
}

TEST_CASE("kernel basis spans the kernel") {
  Mat a = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  Mat k = kernel_basis(a, 3);
  REQUIRE(k.size() == 1);
  for (const RatVec& row : a) CHECK(vec_dot(row, k[0]) == 0);
}

TEST_CASE("solve and inverse") {
  Mat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  auto x = solve_linear(a, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK(mat_vec(a, *x) == RatVec{Rat(5), Rat(10)});

  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(a, *inv) == identity(2));

  Mat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(!inverse(sing).has_value());
  CHECK(!solve_linear(sing, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("reduce modulo a row space") {
  Mat basis = {{Rat(1), Rat(0), Rat(2)}};
  std::vector<size_t> pivots = {0};
  RatVec r = reduce_mod_rows({Rat(3), Rat(1), Rat(1)}, basis, pivots);
  CHECK(r == RatVec{Rat(0), Rat(1), Rat(-5)});
}
