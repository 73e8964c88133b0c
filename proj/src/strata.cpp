#include "kottwitz/strata.hpp"

#include <algorithm>

#include "kottwitz/errors.hpp"
#include "kottwitz/hodge_newton.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

std::string status_name(StratumStatus s) {
  switch (s) {
    case StratumStatus::Admissible: return "Admissible";
    case StratumStatus::EmptyByThm: return "EmptyByThm";
    case StratumStatus::NonEmptyByThm: return "NonEmptyByThm";
    case StratumStatus::NonEmptyByProp5: return "NonEmptyByProp5";
    case StratumStatus::NonEmptyConjectural: return "NonEmptyConjectural";
  }
  return "?";
}

std::vector<Stratum> newton_strata(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                   const EnumerationOptions& opts) {
  std::vector<Stratum> out;
  for (auto& m : modifications_of_basic(d, b, mu, opts)) {
    Stratum s{m.cls, m.bundle, cw_is_zero(m.cls.newton) && m.cls.kappa.is_zero()};
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

SlopeBundle dual(const SlopeBundle& e) {
  std::vector<SlopeBundle::Summand> parts;
  for (const auto& s : e.summands()) parts.push_back({-s.slope, s.copies});
  return SlopeBundle(std::move(parts));
}

}  // namespace

std::vector<StratumReport> strata_report(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                         const EnumerationOptions& opts) {
  const auto strata = newton_strata(d, b, mu, opts);
  const Coweight delta = modification_delta(d, b, mu);
  std::vector<StratumReport> out;
  for (const auto& s : strata) {
    StratumReport r;
    r.stratum = s;
    if (s.trivial) {
      r.status = StratumStatus::Admissible;
      out.push_back(std::move(r));
      continue;
    }
    r.hn_decomposable = is_hn_decomposable(d, delta, s.cls).decomposable;
    r.minimal = true;
    for (const auto& other : strata)
      if (!other.trivial && other.cls != s.cls && dominance_leq(d, other.cls.newton, s.cls.newton)) r.minimal = false;
    if (s.bundle) {
      // The construction works with E_b' inside E_b; here E_b' contains E_b, so pass to duals.
      const SlopeBundle e_b = dual(bundle_of_isocrystal(b.newton));
      const SlopeBundle target = dual(*s.bundle);
      if (e_b.degree().fits_slong_p()) r.shape = classify_prop5_shape(target, e_b.degree().get_si(), true);
      if (r.shape && (r.shape->r2 > 0 || r.shape->shape == Prop5Shape::TwoPart))
        r.prop5 = prop5_witness(*r.shape);
    }
    if (r.hn_decomposable)
      r.status = StratumStatus::EmptyByThm;
    else if (r.minimal)
      r.status = StratumStatus::NonEmptyByThm;
    else if (r.prop5)
      r.status = StratumStatus::NonEmptyByProp5;
    else
      r.status = StratumStatus::NonEmptyConjectural;
    out.push_back(std::move(r));
  }
  return out;
}

StratumStatus stratum_wa_status(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                const SigmaClass& bprime, const EnumerationOptions& opts) {
  for (const auto& r : strata_report(d, b, mu, opts))
    if (r.stratum.cls == bprime) return r.status;
  throw PreconditionError(bprime.to_string() + " is not a Newton stratum");
}

std::vector<CellReport> admissible_cells(const BasedRootDatum& d, const Coweight& mu, const Levi& m, size_t cap) {
  if (!is_integral(mu)) throw PreconditionError("mu must be integral");
  const BasedRootDatum md = d.levi(m);
  const Coweight target_mu = make_dominant(md, apply_w0(d, make_dominant(d, mu)));
  const Pi1Element target = md.pi1().project(to_integer(target_mu));
  std::vector<CellReport> out;
  for (const auto& x : weyl_orbit(d, mu, cap)) {
    if (!is_dominant(md, x)) continue;
    CellReport c;
    c.w_mu = x;
    // walking x up to the dominant mu and reversing gives a minimal w with w mu = x
    auto walk = walk_to_dominant(d, x);
    c.word.assign(walk.word.rbegin(), walk.word.rend());
    c.w_mu_sharp = md.pi1().project(to_integer(x));
    c.passes = c.w_mu_sharp == target;
    c.is_w0_coset = x == target_mu;
    out.push_back(std::move(c));
  }
  return out;
}

Pi1Element levi_chern(const BasedRootDatum& d, const Levi& m, const Coweight& w_mu, const SigmaClass& b_m) {
  const BasedRootDatum md = d.levi(m);
  if (!is_dominant(md, w_mu)) throw PreconditionError("w mu must be dominant for the Levi");
  if (!b_m.kappa.same_group(md.pi1().zero())) throw PreconditionError("b_M must be a class of the Levi");
  return md.pi1().project(to_integer(w_mu)) - b_m.kappa;
}

}  // namespace kottwitz
