#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/ff_bundles.hpp"
#include "kottwitz/strata.hpp"

using namespace kottwitz;
using testing::cw;
using testing::gl_basic;
using testing::omega;

namespace {

std::map<std::string, std::string> statuses(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu) {
  std::map<std::string, std::string> out;
  for (const auto& r : strata_report(d, b, mu)) out[r.stratum.bundle->to_string()] = status_name(r.status);
  return out;
}

}  // namespace

TEST_CASE("strata of small GL_n") {
  auto gl4 = build_datum(Family::GL, 4);
  auto s4 = newton_strata(gl4, gl_basic(gl4, 2), omega(4, 2));
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].trivial);
  CHECK_FALSE(s4[1].trivial);
  CHECK(statuses(gl4, gl_basic(gl4, 2), omega(4, 2)) ==
        std::map<std::string, std::string>{{"0/1×4", "Admissible"}, {"1/2×1,-1/2×1", "EmptyByThm"}});

  auto gl5 = build_datum(Family::GL, 5);
  CHECK(statuses(gl5, gl_basic(gl5, 2), omega(5, 2)) ==
        std::map<std::string, std::string>{{"0/1×5", "Admissible"}, {"1/2×1,-1/3×1", "NonEmptyByThm"}});

  auto gl6 = build_datum(Family::GL, 6);
  CHECK(statuses(gl6, gl_basic(gl6, 3), omega(6, 3)) == std::map<std::string, std::string>{
                                                            {"0/1×6", "Admissible"},
                                                            {"1/2×1,-1/4×1", "EmptyByThm"},
                                                            {"1/3×1,-1/3×1", "NonEmptyByThm"},
                                                            {"1/4×1,-1/2×1", "EmptyByThm"},
                                                            {"1/2×1,0/1×1,-1/3×1", "EmptyByThm"},
                                                            {"1/3×1,0/1×1,-1/2×1", "EmptyByThm"},
                                                            {"1/2×1,0/1×2,-1/2×1", "EmptyByThm"},
                                                        });
  auto gl3 = build_datum(Family::GL, 3);
  CHECK(newton_strata(gl3, gl_basic(gl3, 3), cw("1,1,1")).size() == 1);
  auto gl2 = build_datum(Family::GL, 2);
  CHECK(newton_strata(gl2, gl_basic(gl2, 1), cw("1,0")).size() == 1);
  CHECK_THROWS_AS(newton_strata(gl4, testing::gl_class(gl4, "1,1,0,0"), omega(4, 2)), PreconditionError);
}

TEST_CASE("the three-part construction certifies some strata") {
  // GL_7, omega_3 after dualising: E_b' = O(1/3) + O(0) + O(-1/3)
  auto gl7 = build_datum(Family::GL, 7);
  size_t prop5 = 0;
  for (const auto& r : strata_report(gl7, gl_basic(gl7, 3), omega(7, 3))) {
    if (r.status == StratumStatus::NonEmptyByProp5) {
      ++prop5;
      REQUIRE(r.prop5);
      CHECK(r.prop5->valid());
    }
    if (r.hn_decomposable) CHECK(r.status == StratumStatus::EmptyByThm);
  }
  CHECK(prop5 > 0);
}

TEST_CASE("single-stratum status agrees with the batch report") {
  auto gl6 = build_datum(Family::GL, 6);
  auto b = gl_basic(gl6, 2);
  for (const auto& r : strata_report(gl6, b, omega(6, 2)))
    CHECK(stratum_wa_status(gl6, b, omega(6, 2), r.stratum.cls) == r.status);
  CHECK_THROWS_AS(stratum_wa_status(gl6, b, omega(6, 2), testing::gl_class(gl6, "1,0,0,0,0,-1")), PreconditionError);
}

TEST_CASE("strata for a non-GL group") {
  auto c2 = build_datum(Family::C, 2);
  auto b = basic_class_from_kappa(c2, mu_sharp(c2, cw("0,1")));
  auto rep = strata_report(c2, b, cw("0,1"));
  REQUIRE_FALSE(rep.empty());
  CHECK(rep[0].status == StratumStatus::Admissible);
  for (const auto& r : rep) CHECK_FALSE(r.stratum.bundle);
}

TEST_CASE("admissible Schubert cells") {
  auto gl3 = build_datum(Family::GL, 3);
  auto cells = admissible_cells(gl3, cw("1,1,0"), Levi{0});
  REQUIRE(cells.size() == 2);
  size_t w0 = 0;
  for (const auto& c : cells) {
    if (c.is_w0_coset) {
      ++w0;
      CHECK(c.passes);
    }
    CHECK(c.passes == (c.w_mu == cw("1,0,1")));
  }
  CHECK(w0 == 1);
  auto all = admissible_cells(gl3, cw("1,1,0"), gl3.all_nodes());
  REQUIRE(all.size() == 1);
  CHECK(all[0].passes);
  for (auto d : {build_datum(Family::GL, 5), build_datum(Family::E, 6), build_datum(Family::B, 3)}) {
    Coweight mu(d.rank(), Rational(0));
    mu[0] = 1;
    mu = make_dominant(d, mu);
    for (const auto& c : admissible_cells(d, mu, Levi{0, 1}))
      if (c.is_w0_coset) CHECK(c.passes);
  }
  CHECK_THROWS_AS(admissible_cells(build_datum(Family::E, 8), cw("1,0,0,0,0,0,0,0"), Levi{}, 100), OrbitCapExceeded);
}

TEST_CASE("Levi Chern classes") {
  auto gl3 = build_datum(Family::GL, 3);
  Levi m = gl_block_levi({2, 1});
  auto lm = gl3.levi(m);
  // w = w0: b_M basic in B(M, w~0 mu) gives zero
  Coweight w0mu = cw("1,0,1");
  auto bm = basic_class_from_kappa(lm, lm.pi1().project(to_integer(w0mu)));
  CHECK(levi_chern(gl3, m, w0mu, bm).is_zero());
  // identity coset: blockwise (2,0) - (1,1)
  CHECK(levi_chern(gl3, m, cw("1,1,0"), bm).coords() == IntVector{1, -1});
  // M = G, w = 1: mu_sharp - kappa(b)
  auto b = gl_basic(gl3, 1);
  CHECK(levi_chern(gl3, gl3.all_nodes(), cw("1,1,0"), b).coords() == IntVector{1});
}
