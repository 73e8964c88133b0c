#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/average_coroot.hpp"
#include "oracle/oracles.hpp"

using namespace kottwitz;

namespace {

Rational max_coefficient(const BasedRootDatum& d) {
  Rational best = 0;
  for (int b = 0; b < static_cast<int>(d.num_simple()); ++b)
    for (const auto& e : avg_coroot(d, b)) best = std::max(best, e.value);
  return best;
}

// absolute oracle, coefficients then summed over Galois orbits
void compare_with_oracle(const BasedRootDatum& d, char family) {
  auto c = oracle::cartan(family, static_cast<int>(d.num_simple()));
  auto orbits = d.galois_orbits();
  for (int beta = 0; beta < static_cast<int>(d.num_simple()); ++beta) {
    std::set<int> removed;
    for (const auto& o : orbits)
      if (std::find(o.begin(), o.end(), beta) != o.end()) removed.insert(o.begin(), o.end());
    auto x = oracle::absolute_average(c, beta, removed);
    std::map<Levi, Rational> expected;
    for (const auto& o : orbits) {
      if (removed.count(o.front())) continue;
      Rational s = 0;
      for (int g : o) s += x[g];
      expected[o] = s;
    }
    std::map<Levi, Rational> got;
    for (const auto& e : avg_coroot(d, beta)) got[e.orbit] = e.value;
    CAPTURE(d.type_label());
    CAPTURE(beta);
    CHECK(got == expected);
  }
}

}  // namespace

TEST_CASE("average coroot examples") {
  auto a2 = build_datum(Family::A, 2);
  auto r = avg_coroot(a2, 0);
  REQUIRE(r.size() == 1);
  CHECK(r[0].orbit == Levi{1});
  CHECK(r[0].value == Rational(1, 2));
  CHECK(avg_coroot(build_datum(Family::A, 1), 0).empty());
}

TEST_CASE("average coroots agree with the absolute oracle") {
  for (int n = 1; n <= 8; ++n) compare_with_oracle(build_datum(Family::A, n), 'A');
  for (int n = 2; n <= 8; ++n) compare_with_oracle(build_datum(Family::B, n), 'B');
  for (int n = 2; n <= 8; ++n) compare_with_oracle(build_datum(Family::C, n), 'C');
  for (int n = 4; n <= 8; ++n) compare_with_oracle(build_datum(Family::D, n), 'D');
  for (int n = 6; n <= 8; ++n) compare_with_oracle(build_datum(Family::E, n), 'E');
  compare_with_oracle(build_datum(Family::F, 4), 'F');
  compare_with_oracle(build_datum(Family::G, 2), 'G');
  for (int n = 2; n <= 8; ++n) compare_with_oracle(build_datum(Family::A, n, 2), 'A');
  for (int n = 4; n <= 8; ++n) compare_with_oracle(build_datum(Family::D, n, 2), 'D');
  compare_with_oracle(build_datum(Family::D, 4, 3), 'D');
  compare_with_oracle(build_datum(Family::E, 6, 2), 'E');
}

TEST_CASE("maximal coefficients") {
  CHECK(max_coefficient(build_datum(Family::A, 3)) == Rational(2, 3));
  CHECK(max_coefficient(build_datum(Family::B, 3)) == Rational(4, 3));
  CHECK(max_coefficient(build_datum(Family::C, 3)) == 1);
  CHECK(max_coefficient(build_datum(Family::D, 4)) == 1);
  CHECK(max_coefficient(build_datum(Family::D, 4, 3)) == Rational(3, 2));
  CHECK(max_coefficient(build_datum(Family::E, 6)) == Rational(3, 2));
  CHECK(max_coefficient(build_datum(Family::E, 6, 2)) == 2);
  CHECK(max_coefficient(build_datum(Family::E, 7)) == 2);
  CHECK(max_coefficient(build_datum(Family::E, 8)) == 3);
  CHECK(max_coefficient(build_datum(Family::F, 4)) == 2);
  CHECK(max_coefficient(build_datum(Family::G, 2)) == Rational(3, 2));
  // the coefficient 3 in E8 sits at beta = node 7, gamma = node 3
  auto e8 = avg_coroot(build_datum(Family::E, 8), 7);
  for (const auto& e : e8) CHECK((e.value == 3) == (e.orbit == Levi{3}));
}

TEST_CASE("I-sequence tables") {
  auto f4 = build_datum(Family::F, 4);
  CHECK(i_sequence(f4) == std::vector<Levi>{{1}, {0, 1, 2}, {0, 1, 2, 3}});
  CHECK(i_sequence(build_datum(Family::C, 5)) == std::vector<Levi>{{0, 1, 2, 3, 4}});
  CHECK(i_sequence(build_datum(Family::G, 2)) == std::vector<Levi>{{1}, {0, 1}});
  for (auto d : {f4, build_datum(Family::G, 2), build_datum(Family::E, 6), build_datum(Family::E, 7),
                 build_datum(Family::B, 5), build_datum(Family::D, 6), build_datum(Family::A, 5, 2)})
    CHECK(check_i_sequence(d, i_sequence(d)).empty());
}

TEST_CASE("the E8 table violates the bound; a repaired fourth set satisfies it") {
  auto e8 = build_datum(Family::E, 8);
  auto seq = i_sequence(e8);
  auto bad = check_i_sequence(e8, seq);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].beta == 0);
  CHECK(bad[0].orbit == Levi{1});
  CHECK(bad[0].value == Rational(5, 4));
  auto fixed = seq;
  fixed[3] = Levi{1, 2, 3, 4, 5, 6};
  CHECK(check_i_sequence(e8, fixed).empty());
}
