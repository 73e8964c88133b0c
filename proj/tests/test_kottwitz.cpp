#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/weyl.hpp"
#include "oracle/oracles.hpp"

using namespace kottwitz;
using testing::cw;
using testing::gl_class;
using testing::omega;

namespace {

std::set<Coweight> newtons(const std::vector<SigmaClass>& v) {
  std::set<Coweight> out;
  for (const auto& b : v) out.insert(b.newton);
  return out;
}

std::set<Coweight> oracle_newtons(const std::vector<long>& mu) {
  std::set<Coweight> out;
  for (const auto& v : oracle::gl_newton_points(mu)) out.insert(Coweight(v.rbegin(), v.rend()));
  // the oracle sorts increasing lexicographically; store decreasing slope vectors
  std::set<Coweight> fixed;
  for (auto v : out) {
    std::sort(v.rbegin(), v.rend());
    fixed.insert(v);
  }
  return fixed;
}

}  // namespace

TEST_CASE("newton_kappa_of_gln on cycle representatives") {
  auto gl2 = build_datum(Family::GL, 2);
  auto b = newton_kappa_of_gln(gl2, {{0, 1}, {1, 0}});
  CHECK(b.newton == cw("1,0"));
  CHECK(b.kappa.coords() == IntVector{1});
  b = newton_kappa_of_gln(gl2, {{1, 0}, {1, 0}});
  CHECK(b.newton == cw("1/2,1/2"));
  auto gl5 = build_datum(Family::GL, 5);
  // cycles (0 1 2)(3 4)
  b = newton_kappa_of_gln(gl5, {{1, 2, 0, 4, 3}, {1, 0, 0, 1, 0}});
  CHECK(b.newton == cw("1/2,1/2,1/3,1/3,1/3"));
  CHECK(b.kappa.coords() == IntVector{2});
  // relabelling cycles and rotating exponents inside a cycle gives the same class
  CHECK(newton_kappa_of_gln(gl5, {{4, 3, 0, 1, 2}, {0, 1, 0, 0, 1}}) == b);
}

TEST_CASE("basic classes") {
  auto gl3 = build_datum(Family::GL, 3);
  CHECK(is_basic(gl3, gl_class(gl3, "1/3,1/3,1/3")));
  CHECK_FALSE(is_basic(gl3, gl_class(gl3, "1,1/2,1/2")));
  CHECK(is_basic(gl3, gl_class(gl3, "0,0,0")));
  auto gl2 = build_datum(Family::GL, 2);
  CHECK(basic_class_from_kappa(gl2, gl2.pi1().make({}, {1}), cw("1,0")).newton == cw("1/2,1/2"));
  auto gl4 = build_datum(Family::GL, 4);
  CHECK(basic_class_from_kappa(gl4, gl4.pi1().make({}, {2}), cw("1,1,0,0")).newton == cw("1/2,1/2,1/2,1/2"));
  CHECK(basic_class_from_kappa(gl4, gl4.pi1().make({}, {2}), cw("3,0,-1,0")).newton == cw("1/2,1/2,1/2,1/2"));
  CHECK_THROWS_AS(basic_class_from_kappa(gl4, gl4.pi1().make({}, {2}), cw("1,0,0,0")), PreconditionError);
  auto e6 = build_datum(Family::E, 6);
  for (const auto& e : e6.pi1().torsion_elements()) CHECK(basic_class_from_kappa(e6, e).newton == cw("0,0,0,0,0,0"));
}

TEST_CASE("generalized Kottwitz membership") {
  auto gl2 = build_datum(Family::GL, 2);
  auto one = gl2.pi1().make({}, {1});
  CHECK(in_generalized_kottwitz(gl2, gl_class(gl2, "1,0"), one, cw("1,0")));
  CHECK(in_generalized_kottwitz(gl2, gl_class(gl2, "1/2,1/2"), one, cw("1,0")));
  SigmaClass wrong{cw("1,0"), gl2.pi1().make({}, {2})};
  CHECK_FALSE(in_generalized_kottwitz(gl2, wrong, one, cw("1,0")));
}

TEST_CASE("B(G, mu) for small GL_n") {
  auto gl2 = build_datum(Family::GL, 2);
  auto b = enumerate_B_G_mu(gl2, cw("1,0"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].newton == cw("1/2,1/2"));
  CHECK(b[1].newton == cw("1,0"));
  CHECK(enumerate_B_G_mu(gl2, cw("1,1")).size() == 1);

  auto gl4 = build_datum(Family::GL, 4);
  auto set = newtons(enumerate_B_G_mu(gl4, omega(4, 2)));
  // (3/4,3/4,1/4,1/4) would need a break at x = 2 with slope 3/4: not a lattice polygon
  CHECK(set == std::set<Coweight>{cw("1/2,1/2,1/2,1/2"), cw("2/3,2/3,2/3,0"), cw("1,1/3,1/3,1/3"),
                                  cw("1,1/2,1/2,0"), cw("1,1,0,0")});
  CHECK_FALSE(is_realizable(gl4, gl_class(gl4, "3/4,3/4,1/4,1/4")));
}

TEST_CASE("B(GL_n, mu) agrees with the Newton polygon oracle") {
  const std::vector<std::vector<long>> mus{{2, 0, 0}, {3, 1, 0}, {2, 1, 1, 0}, {3, 0, 0, 0}, {2, 2, 0, -1},
                                           {1, 0, 0, 0, 0}, {2, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {3, 1, 0, 0, 0, -1}};
  for (const auto& m : mus) {
    auto gl = build_datum(Family::GL, static_cast<int>(m.size()));
    Coweight mu;
    for (long x : m) mu.push_back(Rational(x));
    CAPTURE(format_coweight(mu));
    CHECK(newtons(enumerate_B_G_mu(gl, mu)) == oracle_newtons(m));
  }
}

TEST_CASE("enumeration invariants") {
  for (auto d : {build_datum(Family::GL, 5), build_datum(Family::E, 6), build_datum(Family::C, 3),
                 build_datum("a:3:galois=2"), build_datum("d:4:galois=3"), build_datum("gl:4:galois=2")}) {
    Coweight mu(d.rank(), Rational(0));
    mu[0] = 1;
    if (d.is_galois_stable({0}) == false) mu = make_dominant(d, cw_add(mu, galois_apply(d, mu)));
    mu = make_dominant(d, mu);
    CAPTURE(d.type_label());
    auto set = enumerate_B_G_mu(d, mu);
    size_t basic = 0;
    std::set<std::pair<Coweight, IntVector>> seen;
    for (const auto& b : set) {
      basic += is_basic(d, b);
      CHECK(has_consistent_invariants(d, b));
      CHECK(is_dominant(d, b.newton));
      CHECK(seen.insert({b.newton, b.kappa.coords()}).second);
      CHECK(dominance_leq(d, set.front().newton, b.newton));
    }
    CHECK(basic == 1);
    CHECK(is_basic(d, set.front()));
    CHECK(enumerate_B_G_mu(d, mu, testing::serial()) == set);
  }
}

TEST_CASE("GL_n classes are realised by representatives") {
  auto gl6 = build_datum(Family::GL, 6);
  for (const auto& b : enumerate_B_G_mu(gl6, cw("2,1,1,0,0,0"))) CHECK(newton_kappa_of_gln(gl6, gln_representative(b)) == b);
}

TEST_CASE("A(G, mu) and torsion") {
  auto gl3 = build_datum(Family::GL, 3);
  CHECK(enumerate_A_G_mu(gl3, cw("1,0,0")) == enumerate_B_G_mu(gl3, cw("1,0,0")));
  // adjoint A1: pi_1 = Z/2, the coroot has index 2
  auto a1 = build_datum(Family::A, 1);
  auto bset = enumerate_B_G_mu(a1, cw("2"));
  auto aset = enumerate_A_G_mu(a1, cw("2"));
  CHECK(bset.size() == 2);  // nu = 0 and nu = 1 (the coroot is 2 omega)
  // the other kappa contributes nu = 0 and nu = omega
  CHECK(aset.size() == 4);
  auto central = enumerate_A_G_mu(a1, cw("0"));
  CHECK(central.size() == 2);
  for (const auto& b : central) CHECK(is_basic(a1, b));
}

TEST_CASE("denominator bound is a guard") {
  auto gl4 = build_datum(Family::GL, 4);
  EnumerationOptions opts;
  opts.denominator_bound = Integer(2);
  CHECK_THROWS_AS(enumerate_B_G_mu(gl4, omega(4, 1), opts), DenominatorBoundError);
  CHECK(default_denominator_bound(gl4) == 12);
  CHECK(default_denominator_bound(build_datum(Family::E, 6)) == 420);
}

TEST_CASE("preceq_M") {
  auto gl3 = build_datum(Family::GL, 3);
  Levi m{1};  // GL_1 x GL_2
  const auto& pm = gl3.levi(m).pi1();
  auto e1 = pm.project(IntVector{0, 1, 0});
  auto e2 = pm.project(IntVector{1, 0, 0});
  CHECK(preceq_M(gl3, m, e1, e1, false));
  CHECK(preceq_M(gl3, m, e1, e2, false));
  CHECK_FALSE(preceq_M(gl3, m, e2, e1, false));
  const auto& pt = gl3.levi({}).pi1();
  CHECK_FALSE(preceq_M(gl3, {}, pt.project(IntVector{2, 0, 0}), pt.project(IntVector{0, 0, 2}), false));
  CHECK(preceq_M(gl3, {}, pt.project(IntVector{0, 0, 2}), pt.project(IntVector{2, 0, 0}), false));
}

TEST_CASE("w0 transfer") {
  auto gl5 = build_datum(Family::GL, 5);
  auto e = gl5.levi(gl_block_levi({2, 3})).pi1().project(IntVector{1, 1, 1, 0, 0});
  auto t = w0_transfer(gl5, gl_block_levi({2, 3}), cw("1,1,1,0,0"), e);
  CHECK(t.levi == gl_block_levi({3, 2}));
  CHECK(t.mu == cw("1,0,0,1,1"));
  CHECK(t.kappa.coords() == IntVector{1, 2});
  auto gl3 = build_datum(Family::GL, 3);
  auto g = w0_transfer(gl3, gl3.all_nodes(), cw("1,1,0"), gl3.pi1().project(IntVector{1, 1, 0}));
  CHECK(g.levi == gl3.all_nodes());
  CHECK(g.mu == cw("1,1,0"));
  auto s = w0_transfer(gl3, gl_block_levi({2, 1}), cw("1,1,0"), gl3.levi(gl_block_levi({2, 1})).pi1().project(IntVector{1, 1, 0}));
  CHECK(s.levi == gl_block_levi({1, 2}));
  CHECK(s.mu == cw("0,1,1"));
}

TEST_CASE("restrict_to_levi") {
  auto gl3 = build_datum(Family::GL, 3);
  auto b = gl_class(gl3, "1,1/2,1/2");
  auto r = restrict_to_levi(gl3, b, gl_block_levi({1, 2}), cw("1,1,0"));
  CHECK(r.mu_prime == cw("1,1,0"));
  CHECK(r.eps.is_zero());
  CHECK(is_basic(gl3.levi(gl_block_levi({1, 2})), r.b_m));
  auto gl4 = build_datum(Family::GL, 4);
  auto r4 = restrict_to_levi(gl4, gl_class(gl4, "1,1/3,1/3,1/3"), gl_block_levi({1, 3}), omega(4, 2));
  CHECK(r4.mu_prime == cw("1,1,0,0"));
  auto basic = testing::gl_basic(gl4, 2);
  auto rg = restrict_to_levi(gl4, basic, gl4.all_nodes(), omega(4, 2));
  CHECK(rg.mu_prime == omega(4, 2));
  CHECK(rg.b_m == basic);
}

TEST_CASE("property: operations on random coweights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
  auto gl = build_datum(Family::GL, 4);
  auto rand_cw = [&] {
    Coweight v(4);
    for (auto& x : v) x = Rational(num(rng), den(rng)), x.canonicalize();
    return v;
  };
  for (int t = 0; t < 300; ++t) {
    Coweight a = make_dominant(gl, rand_cw()), b = make_dominant(gl, rand_cw()), c = make_dominant(gl, rand_cw());
    CHECK(dominance_leq(gl, a, a));
    if (dominance_leq(gl, a, b) && dominance_leq(gl, b, a)) CHECK(a == b);
    if (dominance_leq(gl, a, b) && dominance_leq(gl, b, c)) CHECK(dominance_leq(gl, a, c));
  }
  auto tw = build_datum("a:3:galois=2");
  for (int t = 0; t < 100; ++t) {
    Coweight x(3);
    for (auto& v : x) v = Rational(num(rng), den(rng)), v.canonicalize();
    Coweight ga = galois_average(tw, x), wa = weyl_average(tw, x);
    CHECK(galois_average(tw, ga) == ga);
    CHECK(weyl_average(tw, wa) == wa);
    CHECK(galois_average(tw, wa) == weyl_average(tw, ga));
  }
  auto e6 = build_datum(Family::E, 6);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int t = 0; t < 100; ++t) {
    IntVector x(6), y(6);
    for (auto& v : x) v = small(rng);
    for (auto& v : y) v = small(rng);
    IntVector s(6);
    for (int i = 0; i < 6; ++i) s[i] = x[i] + y[i];
    CHECK(e6.pi1().project(s) == e6.pi1().project(x) + e6.pi1().project(y));
    CHECK(e6.pi1().project(to_integer(galois_apply(build_datum("e:6:galois=2"), to_rational(x)))).coords().size() == 1);
  }
  for (size_t i = 0; i < e6.num_simple(); ++i) CHECK(e6.pi1().project(e6.simple_coroots()[i]).is_zero());
}
