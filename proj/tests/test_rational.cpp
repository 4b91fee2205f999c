#include <catch2/catch_amalgamated.hpp>

#include "pegdraw/rational.hpp"

using namespace pegdraw;

TEST_CASE("floor and ceil handle negatives") {
  CHECK(rat_floor(rat(7, 2)) == 3);
  CHECK(rat_ceil(rat(7, 2)) == 4);
  CHECK(rat_floor(rat(-7, 2)) == -4);
  CHECK(rat_ceil(rat(-7, 2)) == -3);
  CHECK(rat_floor(rat(6, 2)) == 3);
  CHECK(rat_ceil(rat(6, 2)) == 3);
}

TEST_CASE("pow2 covers negative exponents") {
  CHECK(pow2(0) == rat(1));
  CHECK(pow2(5) == rat(32));
  CHECK(pow2(-3) == rat(1, 8));
}

TEST_CASE("dyadic_floor stays within one unit below") {
  rat x(355, 113);
  rat d = dyadic_floor(x, 10);
  CHECK(cmp(d, x) <= 0);
  CHECK(cmp(x - d, pow2(-10)) < 0);
  // Exact dyadics are fixed points.
  CHECK(dyadic_floor(rat(5, 8), 10) == rat(5, 8));
}

TEST_CASE("isqrt is the floor of the square root") {
  CHECK(isqrt(bigint(0)) == 0);
  CHECK(isqrt(bigint(15)) == 3);
  CHECK(isqrt(bigint(16)) == 4);
  CHECK(isqrt(bigint(17)) == 4);
}

TEST_CASE("sqrt_lower_bound is a tight positive lower bound") {
  for (const rat& x : {rat(2), rat(1, 3), rat(49), rat(1, 1000000), rat(144, 25)}) {
    rat L = sqrt_lower_bound(x);
    CHECK(sign(L) > 0);
    CHECK(cmp(L * L, x) <= 0);
    // Tightness: scaling L up by (1 + 2^-30) must overshoot x.
    rat Lup = L * (rat(1) + pow2(-30));
    CHECK(cmp(Lup * Lup, x) > 0);
  }
  CHECK(sqrt_lower_bound(rat(49)) <= rat(7));
}

TEST_CASE("rational strings round-trip") {
  for (const rat& x : {rat(0), rat(-7, 3), rat(22, 7), rat(5)}) {
    CHECK(rat_from_string(rat_to_string(x)) == x);
  }
  CHECK(rat_from_string("42") == rat(42));
  CHECK(rat_from_string("-6/4") == rat(-3, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), error);
  CHECK_THROWS_AS(rat_from_string("abc"), error);
}
