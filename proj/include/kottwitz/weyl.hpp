#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kottwitz/root_datum.hpp"

namespace kottwitz {

inline constexpr size_t kDefaultOrbitCap = 10'000'000;

Coweight reflect(const BasedRootDatum& d, int node, const Coweight& x);
SmallVector reflect(const BasedRootDatum& d, int node, const SmallVector& x);

bool is_dominant(const BasedRootDatum& d, const Coweight& x);
bool is_dominant(const BasedRootDatum& d, const SmallVector& x);
bool is_integral_coweight(const Coweight& x);

// Dominant representative of the W-orbit, plus the simple reflections applied (in order).
struct DominantWalk {
  Coweight dominant;
  std::vector<int> word;
};
DominantWalk walk_to_dominant(const BasedRootDatum& d, const Coweight& x);
Coweight make_dominant(const BasedRootDatum& d, const Coweight& x);

// Full orbit under W(d), sorted lexicographically descending.
std::vector<Coweight> weyl_orbit(const BasedRootDatum& d, const Coweight& x, size_t cap = kDefaultOrbitCap);
// Mean of the orbit, computed as the projection onto W-invariants.
Coweight weyl_average(const BasedRootDatum& d, const Coweight& x);
Coweight galois_average(const BasedRootDatum& d, const Coweight& x);
Coweight galois_apply(const BasedRootDatum& d, const Coweight& x);
bool is_galois_fixed(const BasedRootDatum& d, const Coweight& x);
Coweight apply_w0(const BasedRootDatum& d, const Coweight& x);

// v1 <= v2: v2 - v1 is a non-negative rational combination of simple coroots.
bool dominance_leq(const BasedRootDatum& d, const Coweight& v1, const Coweight& v2);
// Coefficients of v2 - v1 in simple coroots when it lies in their span.
std::optional<RatVector> dominance_difference(const BasedRootDatum& d, const Coweight& v1, const Coweight& v2);

// <alpha, mu> in {-1, 0, 1} for every root.
bool is_minuscule(const BasedRootDatum& d, const Coweight& mu);
// Height <2 rho, x>.
Rational height(const BasedRootDatum& d, const Coweight& x);

// Nodes j with <alpha_j, x> = 0: the centralizer Levi of a dominant x.
Levi centralizer_levi(const BasedRootDatum& d, const Coweight& x);

bool lex_greater(const Coweight& a, const Coweight& b);

// Reference implementations that ignore the permutation fast path.
namespace generic {
DominantWalk walk_to_dominant(const BasedRootDatum& d, const Coweight& x);
std::vector<Coweight> weyl_orbit(const BasedRootDatum& d, const Coweight& x, size_t cap = kDefaultOrbitCap);
Coweight weyl_average(const BasedRootDatum& d, const Coweight& x, size_t cap = kDefaultOrbitCap);
}  // namespace generic

}  // namespace kottwitz
