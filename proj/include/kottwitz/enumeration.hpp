#pragma once

#include <optional>
#include <vector>

#include "kottwitz/sigma_class.hpp"

namespace kottwitz {

enum class Exec { Serial, Parallel };

struct EnumerationOptions {
  // Every Newton point found must have denominators dividing this; nullopt = default bound.
  std::optional<Integer> denominator_bound;
  Exec exec = Exec::Parallel;
};

// lcm(1..n) for split GL_n-type data, lcm(1..rank+1) for other split data; the
// argument is scaled by the Galois order for non-split data.
Integer default_denominator_bound(const BasedRootDatum& d);

Pi1Element mu_sharp(const BasedRootDatum& d, const Coweight& mu);
Coweight mu_diamond(const BasedRootDatum& d, const Coweight& mu);

// B(G, e, delta), sorted by height, then Newton point, then kappa.
std::vector<SigmaClass> enumerate_generalized(const BasedRootDatum& d, const Pi1Element& e, const Coweight& delta,
                                              const EnumerationOptions& opts = {});
std::vector<SigmaClass> enumerate_B_G_mu(const BasedRootDatum& d, const Coweight& mu,
                                         const EnumerationOptions& opts = {});
// Union of B(G, mu_sharp + eps, mu_diamond) over torsion eps.
std::vector<SigmaClass> enumerate_A_G_mu(const BasedRootDatum& d, const Coweight& mu,
                                         const EnumerationOptions& opts = {});

void sort_classes(const BasedRootDatum& d, std::vector<SigmaClass>& classes);

struct LeviRestriction {
  Coweight mu_prime;  // M-dominant element of W mu
  Pi1Element eps;     // torsion in pi_1(M)_Gamma
  SigmaClass b_m;     // b as a class of M
};
LeviRestriction restrict_to_levi(const BasedRootDatum& d, const SigmaClass& b, const Levi& m, const Coweight& mu);

}  // namespace kottwitz
