#pragma once

#include <optional>
#include <string>

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

// A sigma-conjugacy class through its Newton point and Kottwitz point.
struct SigmaClass {
  Coweight newton;
  Pi1Element kappa;

  bool operator==(const SigmaClass& other) const { return newton == other.newton && kappa == other.kappa; }
  bool operator!=(const SigmaClass& other) const { return !(*this == other); }
  std::string to_string() const;
};

// b = perm * diag(pi^{a_1}, ..., pi^{a_n}); perm is given as images of 0..n-1.
struct GlnRepresentative {
  std::vector<int> perm;
  IntVector exponents;
};

SigmaClass newton_kappa_of_gln(const BasedRootDatum& gl, const GlnRepresentative& rep);
// Standard representative realising a GL_n class: one cycle per slope block.
GlnRepresentative gln_representative(const SigmaClass& b);

bool is_basic(const BasedRootDatum& d, const SigmaClass& b);
// Newton point of the basic class whose Kottwitz point lifts to `lift`.
Coweight basic_newton(const BasedRootDatum& d, const Coweight& lift);
SigmaClass basic_class_from_kappa(const BasedRootDatum& d, const Pi1Element& e, const Coweight& mu_lift);
SigmaClass basic_class_from_kappa(const BasedRootDatum& d, const Pi1Element& e);

// Light invariants: dominant Newton point and kappa = nu in pi_1 tensor Q. Does not decide
// whether some b actually has these invariants.
bool has_consistent_invariants(const BasedRootDatum& d, const SigmaClass& b);
// Integral lift of the Kottwitz point of b in its centralizer Levi M_b, if the pair (nu, kappa)
// is the invariant of an actual class. Throws InternalError if two lifts survive.
std::optional<IntVector> kottwitz_lift(const BasedRootDatum& d, const SigmaClass& b);
bool is_realizable(const BasedRootDatum& d, const SigmaClass& b);
// kappa_M(b) for a standard Levi M containing M_b.
Pi1Element levi_kappa(const BasedRootDatum& d, const SigmaClass& b, const Levi& m);
// The class of b viewed in B(M) for M containing M_b.
SigmaClass class_in_levi(const BasedRootDatum& d, const SigmaClass& b, const Levi& m);

// kappa(b) = e and nu_b <= delta
bool in_generalized_kottwitz(const BasedRootDatum& d, const SigmaClass& b, const Pi1Element& e,
                             const Coweight& delta);

// Deterministic total order: height, then Newton point, then kappa.
bool class_order(const BasedRootDatum& d, const SigmaClass& a, const SigmaClass& b);

}  // namespace kottwitz
