#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kottwitz/enumeration.hpp"

namespace kottwitz {

struct HnDecomposition {
  bool decomposable = false;
  // Smallest strict standard Levi containing M_b whose coroots span delta - nu_b.
  std::optional<Levi> levi;
};

// delta is mu_diamond (or the delta of a generalized Kottwitz set); requires nu_b <= delta.
HnDecomposition is_hn_decomposable(const BasedRootDatum& d, const Coweight& delta, const SigmaClass& b);
// Every simple root pairing positively with nu_b has a positive coefficient in delta - nu_b.
bool indecomposability_coefficient_check(const BasedRootDatum& d, const Coweight& delta, const SigmaClass& b);

struct MinimalLevi {
  Levi m1;                  // M_b together with the support of mu_diamond - nu_b
  Levi levi;                // w0 M1 w0^{-1}
  Coweight tilde_w0_mu;     // (w0 mu) made dominant for `levi`
  SigmaClass b_in_levi;     // transported class, a class of `levi`
  Pi1Element eps_levi;      // kappa of b_in_levi minus (tilde_w0_mu)^sharp in pi_1(levi)
  Pi1Element kappa_m1;      // kappa_{M1}(b)
};
MinimalLevi minimal_indecomposable_levi(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b);

struct FullyHnReport {
  bool fully_decomposable = true;
  std::vector<SigmaClass> offending;  // non-basic HN-indecomposable classes
  size_t classes = 0;
};
FullyHnReport is_fully_hn_decomposable(const BasedRootDatum& d, const Pi1Element& e, const Coweight& delta,
                                       const EnumerationOptions& opts = {});
FullyHnReport is_fully_hn_decomposable(const BasedRootDatum& d, const Coweight& mu,
                                       const EnumerationOptions& opts = {});

enum class Verdict { Equal, NotEqual };

struct WaReport {
  Verdict verdict = Verdict::NotEqual;
  Levi levi;             // M1, where (M1, mu, b) is HN-indecomposable
  Levi transferred_levi; // w0 M1 w0^{-1}
  bool basic_in_levi = false;
  std::vector<SigmaClass> offending;
  std::string explanation;
};
WaReport wa_equals_a(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b, const Pi1Element& eps,
                     const EnumerationOptions& opts = {});

// Throws PreconditionError unless b lies in B(G, mu_sharp + eps, mu_diamond) with eps torsion.
void require_in_kottwitz_set(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b, const Pi1Element& eps);

}  // namespace kottwitz
