#include "kottwitz/witness.hpp"

#include <algorithm>

#include "kottwitz/average_coroot.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/hodge_newton.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

std::string WitnessCertificate::summary() const {
  auto flag = [](bool v) { return v ? "ok" : "FAILED"; };
  return std::string("pairing ") + flag(positive_pairing) + ", dominant " + flag(levi_dominant) + ", eps lifts " +
         flag(eps_lifts) + ", kappa " + flag(kappa_equation) + ", nu " + flag(nu_inequality) + ", membership " +
         flag(membership);
}

namespace {

Levi orbit_of(const BasedRootDatum& d, int node) {
  for (const auto& o : d.galois_orbits())
    if (std::find(o.begin(), o.end(), node) != o.end()) return o;
  throw InvalidArgument("node out of range");
}

Coweight coroot(const BasedRootDatum& d, int node) { return cw_from(d.simple_coroots()[node]); }

// Torsion elements of pi_1(M) mapping to eps in pi_1(G).
std::vector<Pi1Element> torsion_preimages(const BasedRootDatum& d, const BasedRootDatum& m, const Pi1Element& eps) {
  std::vector<Pi1Element> out;
  for (const auto& t : m.pi1().torsion_elements())
    if (d.pi1().project(m.pi1().lift(t)) == eps) out.push_back(t);
  return out;
}

}  // namespace

WitnessCertificate verify_witness(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b,
                                  const Pi1Element& eps, int beta_tilde, const Coweight& w_mu) {
  WitnessCertificate c;
  if (beta_tilde < 0 || static_cast<size_t>(beta_tilde) >= d.num_simple()) return c;
  const Levi m_alpha = complement(d, orbit_of(d, beta_tilde));
  const BasedRootDatum ma = d.levi(m_alpha);
  const Levi mb = centralizer_levi(d, b.newton);

  c.positive_pairing = pair(d.simple_roots()[beta_tilde], b.newton) > 0;
  c.levi_dominant = is_dominant(ma, w_mu) && make_dominant(d, w_mu) == make_dominant(d, mu);
  auto lifts = torsion_preimages(d, ma, eps);
  c.eps_lifts = lifts.size() == 1;
  if (!c.eps_lifts || !c.positive_pairing) return c;
  const Pi1Element eps_m = lifts.front();

  const Pi1Element kappa_m = levi_kappa(d, b, m_alpha);
  const Coweight shifted = cw_sub(w_mu, coroot(d, beta_tilde));
  c.kappa_equation = kappa_m == ma.pi1().project(to_integer(shifted)) + eps_m;

  const BasedRootDatum mbd = d.levi(mb);
  RatVector lhs = mbd.pi1().project_rational(b.newton);
  Coweight rhs = cw_add(cw_neg(galois_average(d, weyl_average(ma, coroot(d, beta_tilde)))), galois_average(d, w_mu));
  c.nu_inequality = preceq_M_rational(d, mb, lhs, mbd.pi1().project_rational(rhs));

  // b' basic in M_alpha~ with kappa = -beta~^vee sharp + eps
  const IntVector basic_lift = to_integer(cw_add(cw_neg(coroot(d, beta_tilde)), cw_from(ma.pi1().lift(eps_m))));
  const Pi1Element kappa_basic = ma.pi1().project(basic_lift);
  const Coweight nu_basic = basic_newton(ma, cw_from(basic_lift));
  const Coweight delta = cw_add(nu_basic, galois_average(ma, make_dominant(ma, w_mu)));
  const SigmaClass bm = class_in_levi(d, b, m_alpha);
  c.membership = is_dominant(ma, delta) &&
                 in_generalized_kottwitz(ma, bm, kappa_basic + ma.pi1().project(to_integer(w_mu)), delta);
  return c;
}

NonbasicWitness find_nonbasic_witness(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b,
                                      const Pi1Element& eps) {
  require_in_kottwitz_set(d, mu, b, eps);
  if (is_basic(d, b)) throw PreconditionError("witness needs a non-basic class");
  if (is_hn_decomposable(d, mu_diamond(d, mu), b).decomposable)
    throw PreconditionError("witness needs an HN-indecomposable triple");

  NonbasicWitness w;
  const Levi mb = centralizer_levi(d, b.newton);
  w.w1_mu = restrict_to_levi(d, b, mb, mu).mu_prime;
  for (const auto& o : d.galois_orbits())
    if (!levi_contains(mb, o)) w.outside_orbits.push_back(o);

  struct Move {
    Coweight result;
    int beta;
  };
  std::vector<Move> moves;
  for (const auto& orbit : w.outside_orbits) {
    const BasedRootDatum ma = d.levi(complement(d, orbit));
    const Coweight lambda = make_dominant(ma, w.w1_mu);
    for (int beta : orbit)
      if (pair(d.simple_roots()[beta], lambda) < 0)
        moves.push_back({make_dominant(ma, reflect(d, beta, lambda)), beta});
  }
  if (moves.empty()) throw InternalError("no reflection raises w1 mu; the triple should be decomposable");

  // dominance-maximal candidates, then the lexicographically largest
  std::vector<const Move*> maximal;
  for (const auto& m : moves) {
    bool dominated = false;
    for (const auto& other : moves)
      if (other.result != m.result && dominance_leq(d, m.result, other.result)) dominated = true;
    if (!dominated) maximal.push_back(&m);
  }
  const Move* best = maximal.front();
  for (const Move* m : maximal)
    if (lex_greater(m->result, best->result) || (m->result == best->result && m->beta < best->beta)) best = m;
  w.w_mu = best->result;

  const BasedRootDatum mbd = d.levi(mb);
  auto coeff = preceq_coefficients(d, mb, mbd.pi1().project_rational(w.w1_mu), mbd.pi1().project_rational(w.w_mu));
  if (!coeff) throw InternalError("w mu is not above w1 mu in pi_1(M_b)");
  for (const auto& q : *coeff) {
    if (!is_integral(q)) throw InternalError("non-integral coefficient in pi_1(M_b)");
    w.n.push_back(q.get_num());
  }
  for (size_t j = 0; j < w.n.size(); ++j)
    if (w.n[j] < 1) throw InternalError("coefficient " + std::to_string(j) + " of w mu - w1 mu vanishes");

  std::vector<size_t> j1;
  for (size_t j = 0; j < w.n.size(); ++j)
    if (w.n[j] == 1) j1.push_back(j);

  w.beta_tilde = best->beta;
  if (j1.size() >= 2) {
    // pick beta~ from the earliest I_i meeting the J_1 representatives
    auto abs_coeff = d.coroot_coefficients(cw_sub(w.w_mu, w.w1_mu));
    if (!abs_coeff) throw InternalError("w mu - w1 mu is not in the coroot span");
    std::vector<int> reps;
    for (size_t j : j1) {
      int rep = -1;
      for (int node : w.outside_orbits[j])
        if ((*abs_coeff)[node] != 0) {
          rep = node;
          break;
        }
      if (rep < 0) rep = w.outside_orbits[j].front();
      reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    for (const auto& level : i_sequence(d)) {
      auto hit = std::find_if(reps.begin(), reps.end(),
                              [&](int r) { return std::binary_search(level.begin(), level.end(), r); });
      if (hit != reps.end()) {
        w.beta_tilde = *hit;
        break;
      }
    }
    w.used_i_sequence = true;
  }
  w.alpha_orbit = orbit_of(d, w.beta_tilde);
  w.m_alpha = complement(d, w.alpha_orbit);
  w.certificate = verify_witness(d, mu, b, eps, w.beta_tilde, w.w_mu);
  if (!w.certificate.all()) throw InternalError("witness certificate failed: " + w.certificate.summary());
  return w;
}

}  // namespace kottwitz
