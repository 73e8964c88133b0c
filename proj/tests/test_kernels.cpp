#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/hodge_newton.hpp"
#include "kottwitz/prop5.hpp"
#include "kottwitz/strata.hpp"

using namespace kottwitz;
using testing::cw;
using testing::omega;

TEST_CASE("parallel enumeration matches the serial reference") {
  const EnumerationOptions par{std::nullopt, Exec::Parallel};
  const EnumerationOptions ser{std::nullopt, Exec::Serial};
  std::vector<std::pair<BasedRootDatum, Coweight>> cases{
      {build_datum(Family::GL, 7), cw("2,1,1,0,0,0,0")},
      {build_datum(Family::E, 6), cw("1,0,0,0,0,1")},
      {build_datum(Family::F, 4), cw("0,0,0,1")},
      {build_datum("e:6:galois=2"), cw("0,1,0,0,0,0")},
      {build_datum("d:4:galois=3"), cw("0,1,0,0")},
  };
  for (const auto& [d, mu] : cases) {
    CAPTURE(d.type_label());
    CHECK(enumerate_B_G_mu(d, mu, par) == enumerate_B_G_mu(d, mu, ser));
    CHECK(enumerate_A_G_mu(d, mu, par) == enumerate_A_G_mu(d, mu, ser));
    auto fp = is_fully_hn_decomposable(d, mu, par), fs = is_fully_hn_decomposable(d, mu, ser);
    CHECK(fp.fully_decomposable == fs.fully_decomposable);
    CHECK(fp.offending == fs.offending);
  }
}

TEST_CASE("parallel rank-inequality scan matches the serial reference") {
  auto p = prop5_disjunction_scan(14, Exec::Parallel, true);
  auto s = prop5_disjunction_scan(14, Exec::Serial, true);
  CHECK(p.configurations == s.configurations);
  CHECK(p.skipped == s.skipped);
  CHECK(p.witness_failures == s.witness_failures);
  CHECK(p.counterexamples.size() == s.counterexamples.size());
}

TEST_CASE("parallel strata report matches the serial reference") {
  auto gl8 = build_datum(Family::GL, 8);
  auto b = testing::gl_basic(gl8, 2);
  auto p = strata_report(gl8, b, omega(8, 2), {std::nullopt, Exec::Parallel});
  auto s = strata_report(gl8, b, omega(8, 2), {std::nullopt, Exec::Serial});
  REQUIRE(p.size() == s.size());
  for (size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i].stratum.cls == s[i].stratum.cls);
    CHECK(p[i].status == s[i].status);
  }
}
