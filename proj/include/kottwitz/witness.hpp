#pragma once

#include <string>
#include <vector>

#include "kottwitz/enumeration.hpp"

namespace kottwitz {

// Each condition is recomputed from (mu, b, eps, beta_tilde, w_mu) alone.
struct WitnessCertificate {
  bool positive_pairing = false;  // <alpha~, nu_b> > 0
  bool levi_dominant = false;     // w mu is M_alpha~-dominant
  bool eps_lifts = false;         // eps comes from pi_1(M_alpha~)_tor
  bool kappa_equation = false;    // kappa_{M_alpha~}(b) = (w mu - beta~^vee)^sharp + eps
  bool nu_inequality = false;     // in pi_1(M_b)_{Gamma,Q}
  bool membership = false;        // b lies in the generalized Kottwitz set of M_alpha~
  bool all() const {
    return positive_pairing && levi_dominant && eps_lifts && kappa_equation && nu_inequality && membership;
  }
  std::string summary() const;
};

struct NonbasicWitness {
  int beta_tilde = -1;     // simple root of the absolute datum restricting to alpha~
  Levi alpha_orbit;        // Galois orbit of beta_tilde, i.e. alpha~
  Levi m_alpha;            // complement of alpha_orbit
  Coweight w_mu;
  Coweight w1_mu;          // M_b-dominant conjugate of mu bounding b in M_b
  std::vector<Levi> outside_orbits;  // orbits outside M_b
  IntVector n;             // w mu - w1 mu in pi_1(M_b)_Gamma, per outside orbit
  bool used_i_sequence = false;
  WitnessCertificate certificate;
};

// Requires b non-basic, (G, mu, b) HN-indecomposable and b in B(G, mu_sharp + eps, mu_diamond).
NonbasicWitness find_nonbasic_witness(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b,
                                      const Pi1Element& eps);

WitnessCertificate verify_witness(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b,
                                  const Pi1Element& eps, int beta_tilde, const Coweight& w_mu);

}  // namespace kottwitz
