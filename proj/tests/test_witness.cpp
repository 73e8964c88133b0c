#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/hodge_newton.hpp"
#include "kottwitz/witness.hpp"

using namespace kottwitz;
using testing::cw;
using testing::gl_basic;
using testing::gl_class;
using testing::omega;

namespace {

size_t check_all(const BasedRootDatum& d, const Coweight& mu, const Pi1Element& eps) {
  size_t n = 0;
  for (const auto& b : enumerate_generalized(d, mu_sharp(d, mu) + eps, mu_diamond(d, mu))) {
    if (is_basic(d, b) || is_hn_decomposable(d, mu_diamond(d, mu), b).decomposable) continue;
    CAPTURE(b.to_string());
    auto w = find_nonbasic_witness(d, mu, b, eps);
    CHECK(w.certificate.all());
    CHECK(verify_witness(d, mu, b, eps, w.beta_tilde, w.w_mu).all());
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("witness for GL_5, omega_2") {
  auto gl5 = build_datum(Family::GL, 5);
  auto b = gl_class(gl5, "1/2,1/2,1/3,1/3,1/3");
  auto w = find_nonbasic_witness(gl5, omega(5, 2), b, gl5.pi1().zero());
  CHECK(w.beta_tilde == 1);
  CHECK(w.w_mu == cw("1,1,0,0,0"));
  CHECK(w.w1_mu == cw("1,0,1,0,0"));
  CHECK(w.n == IntVector{1});
  CHECK_FALSE(w.used_i_sequence);
  CHECK(w.certificate.all());
  // a wrong w mu fails the independent check
  CHECK_FALSE(verify_witness(gl5, omega(5, 2), b, gl5.pi1().zero(), 1, cw("1,0,1,0,0")).all());
}

TEST_CASE("witness preconditions") {
  auto gl2 = build_datum(Family::GL, 2);
  // (1,0) in B(GL_2,(1,0)) is decomposable through the torus
  CHECK_THROWS_AS(find_nonbasic_witness(gl2, cw("1,0"), gl_class(gl2, "1,0"), gl2.pi1().zero()), PreconditionError);
  CHECK_THROWS_AS(find_nonbasic_witness(gl2, cw("1,0"), gl_basic(gl2, 1), gl2.pi1().zero()), PreconditionError);
}

TEST_CASE("witnesses across types") {
  CHECK(check_all(build_datum(Family::GL, 5), omega(5, 2), build_datum(Family::GL, 5).pi1().zero()) == 1);
  CHECK(check_all(build_datum(Family::GL, 6), omega(6, 3), build_datum(Family::GL, 6).pi1().zero()) > 0);
  auto c3 = build_datum(Family::C, 3);
  CHECK(check_all(c3, cw("0,0,1"), c3.pi1().zero()) > 0);
  auto e6 = build_datum(Family::E, 6);
  CHECK(check_all(e6, cw("1,0,0,0,0,0"), e6.pi1().zero()) == 4);
  auto e7 = build_datum(Family::E, 7);
  CHECK(check_all(e7, cw("0,0,0,0,0,0,1"), e7.pi1().zero()) == 9);
  auto d5 = build_datum(Family::D, 5);
  CHECK(check_all(d5, cw("0,0,0,0,1"), d5.pi1().zero()) == 2);
  // unitary group in 5 variables; mu_diamond averages omega_2 with its conjugate
  auto tgl = build_datum("gl:5:galois=2");
  size_t total = 0;
  for (const auto& e : tgl.pi1().torsion_elements()) total += check_all(tgl, omega(5, 2), e);
  CHECK(total > 0);
}
