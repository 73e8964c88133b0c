#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/smith.hpp"

using namespace kottwitz;

TEST_CASE("rationals parse and print as p/q") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-2")) == "-2/1");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), InvalidArgument);
  CHECK(parse_integer_list("3, -1,0") == IntVector{3, -1, 0});
}

TEST_CASE("floor, ceil and lcm helpers") {
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(ceil_of(Rational(-1, 2)) == 0);
  CHECK(floor_of(Rational(7, 3)) == 2);
  CHECK(lcm_range(6) == 60);
  CHECK(lcm_range(8) == 840);
  CHECK(lcm_of_denominators({Rational(1, 4), Rational(5, 6)}) == 12);
}

TEST_CASE("exact solver") {
  RatMatrix a{{2, 1}, {1, 3}};
  auto x = solve_unique(a, {Rational(3), Rational(5)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(solve_unique(RatMatrix{{1}, {2}}, {Rational(1), Rational(3)}));
  CHECK_THROWS_AS(solve_unique(RatMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(2)}), InternalError);
}

TEST_CASE("Smith normal form") {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithForm s = smith_normal_form(a, 3, 3);
  CHECK(s.diag(0) == 2);
  CHECK(s.diag(1) == 6);
  CHECK(s.diag(2) == 12);
  CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
  CHECK(mat_mul(s.u, s.u_inv) == identity_matrix(3));

  IntMatrix b{{1, -1, 0}, {0, 1, -1}};
  SmithForm t = smith_normal_form(b, 2, 3);
  CHECK(t.rank == 2);
  CHECK(t.diag(0) == 1);
  CHECK(t.diag(1) == 1);
}
