#pragma once

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// e1 <=_M e2 in pi_1(M)_Gamma (or its rationalisation when `rational` is set): e2 - e1 is a
// non-negative integral (resp. rational) combination of images of the simple coroots outside M.
bool preceq_M(const BasedRootDatum& g, const Levi& m, const Pi1Element& e1, const Pi1Element& e2, bool rational);
// Same order on free coordinates of pi_1(M)_Gamma tensor Q.
bool preceq_M_rational(const BasedRootDatum& g, const Levi& m, const RatVector& f1, const RatVector& f2);

// Non-negative coefficients per Galois orbit outside M when e2 - e1 is such a combination.
std::optional<RatVector> preceq_coefficients(const BasedRootDatum& g, const Levi& m, const RatVector& f1,
                                             const RatVector& f2);

Levi complement(const BasedRootDatum& g, const Levi& m);
Levi levi_union(const Levi& a, const Levi& b);
bool levi_contains(const Levi& big, const Levi& small);
// tau(M) = w0 M w0^{-1}
Levi w0_conjugate_levi(const BasedRootDatum& g, const Levi& m);

IntVector apply_w0(const BasedRootDatum& g, const IntVector& x);

struct W0Transfer {
  Levi levi;
  Coweight mu;
  Pi1Element kappa;
};
// (w0 M w0^{-1}, (w0 mu)_{dominant for the new Levi}, w0 . e)
W0Transfer w0_transfer(const BasedRootDatum& g, const Levi& m, const Coweight& mu, const Pi1Element& e);

}  // namespace kottwitz
