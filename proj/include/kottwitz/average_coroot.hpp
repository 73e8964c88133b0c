#pragma once

#include <vector>

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

struct OrbitCoefficient {
  Levi orbit;  // a Galois orbit of simple roots in M_beta
  Rational value;
};

// Av_{W_{M_beta}}(beta^vee) = beta^vee + sum_gamma n_{beta,gamma} gamma^vee in the Galois coinvariants,
// where M_beta is the complement of the Galois orbit of beta. One entry per orbit of M_beta.
std::vector<OrbitCoefficient> avg_coroot(const BasedRootDatum& d, int beta);

// Increasing Galois-stable subsets I_1 < ... < I_r = Delta used to bound n_{beta,gamma} by 1.
// Only defined for data built from component specs.
std::vector<Levi> i_sequence(const BasedRootDatum& d);

struct ISequenceViolation {
  int beta;
  size_t index;  // i with beta in I_i
  Levi orbit;
  Rational value;
};
// Pairs (beta in I_i, gamma outside I_{i-1}) with n_{beta,gamma} > 1.
std::vector<ISequenceViolation> check_i_sequence(const BasedRootDatum& d, const std::vector<Levi>& seq);

}  // namespace kottwitz
