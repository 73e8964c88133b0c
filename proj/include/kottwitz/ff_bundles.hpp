#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kottwitz/enumeration.hpp"
#include "kottwitz/slope_bundle.hpp"

namespace kottwitz {

// The bundle E_b of a GL_n class: a simple isocrystal of slope lambda goes to O(-lambda).
SlopeBundle bundle_of_isocrystal(const Coweight& nu);
Coweight bundle_nu(const SlopeBundle& e);
// nu_{E_b} = -w0 nu_b for a class of split GL_n.
bool check_nu_formula(const BasedRootDatum& gl, const SigmaClass& b);

Integer chern(const SlopeBundle& e);
// c_1 of E_{b,x} for x in the flag variety of mu: sum(mu) - kappa(b).
Integer modified_chern(const BasedRootDatum& gl, const Coweight& mu, const SigmaClass& b);

bool hom_nonzero(const Rational& lambda1, const Rational& lambda2);
bool h1_vanishes(const Rational& lambda);

// Split GL_n data with a single block, where bundles make sense.
bool is_split_gln(const BasedRootDatum& d);

struct Modification {
  SigmaClass cls;
  std::optional<SlopeBundle> bundle;  // filled for split GL_n
};
// Parameter set of the Newton strata for basic b: B(G, kappa(b) - mu_sharp, nu_b + Av(w0(-mu))).
Pi1Element modification_kappa(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu);
Coweight modification_delta(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu);
std::vector<Modification> modifications_of_basic(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                                 const EnumerationOptions& opts = {});

// Is there an exact sequence 0 -> E' -> E -> E'' -> 0 with E', E'' semistable?
// Throws RankDegreeMismatch when rank(E) != rank(E') + rank(E'') or degrees do not add up.
bool extension_exists(const SlopeBundle& e, const SlopeBundle& sub, const SlopeBundle& quotient);

// F is a minuscule-type modification F subset E of the semistable bundle E: same rank, the
// degree drops by k in [0, rank], and the HN polygon of F lies under that of E twisted down by
// (0^{rank-k}, 1^k).
bool is_minuscule_modification(const SlopeBundle& e, const SlopeBundle& f);

// Number of roots alpha (positive and negative) with <alpha, nu> = lambda.
long jb_graded_dim(const BasedRootDatum& d, const Coweight& nu, const Rational& lambda);
Rational jb_lambda_max(const BasedRootDatum& d, const Coweight& nu);

}  // namespace kottwitz
