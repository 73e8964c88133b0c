#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kottwitz/ff_bundles.hpp"
#include "kottwitz/prop5.hpp"

namespace kottwitz {

enum class StratumStatus { Admissible, EmptyByThm, NonEmptyByThm, NonEmptyByProp5, NonEmptyConjectural };
std::string status_name(StratumStatus s);

struct Stratum {
  SigmaClass cls;
  std::optional<SlopeBundle> bundle;  // split GL_n only
  bool trivial = false;               // the class [1]: the admissible locus
};

// Newton strata of the flag variety of mu for basic b, indexed by B(G, kappa(b) - mu_sharp, delta).
std::vector<Stratum> newton_strata(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                   const EnumerationOptions& opts = {});

struct StratumReport {
  Stratum stratum;
  StratumStatus status = StratumStatus::NonEmptyConjectural;
  bool hn_decomposable = false;
  bool minimal = false;                       // minimal in the set without [1]
  std::optional<Prop5Config> shape;           // shape of E_b', r2 = 0 allowed
  std::optional<Prop5Witness> prop5;          // construction applied to the duals, when r_i > 0
};

StratumStatus stratum_wa_status(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                const SigmaClass& bprime, const EnumerationOptions& opts = {});
// Status for every stratum in one pass.
std::vector<StratumReport> strata_report(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                         const EnumerationOptions& opts = {});

struct CellReport {
  Coweight w_mu;             // M-dominant element of W mu naming the double coset W_M w W_mu
  std::vector<int> word;     // reduced word of the minimal representative w with w mu = w_mu
  Pi1Element w_mu_sharp;     // image in pi_1(M)_Gamma
  bool passes = false;       // (w mu)^sharp = (w0 mu)^sharp in pi_1(M)_Gamma
  bool is_w0_coset = false;
};
// Necessary condition for the Schubert cell of w to meet the weakly admissible locus.
std::vector<CellReport> admissible_cells(const BasedRootDatum& d, const Coweight& mu, const Levi& m,
                                         size_t cap = 10'000'000);

// (w mu)^sharp - kappa_M(b_M) in pi_1(M)_Gamma, for w mu dominant for M.
Pi1Element levi_chern(const BasedRootDatum& d, const Levi& m, const Coweight& w_mu, const SigmaClass& b_m);

}  // namespace kottwitz
