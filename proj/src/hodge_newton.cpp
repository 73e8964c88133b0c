#include "kottwitz/hodge_newton.hpp"

#include <algorithm>

#include "kottwitz/errors.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

namespace {

RatVector coefficients_below(const BasedRootDatum& d, const Coweight& delta, const SigmaClass& b) {
  auto c = dominance_difference(d, b.newton, delta);
  if (!c || std::any_of(c->begin(), c->end(), [](const Rational& q) { return q < 0; }))
    throw PreconditionError("Newton point " + format_coweight(b.newton) + " is not below " + format_coweight(delta));
  return *c;
}

std::vector<Levi> galois_stable_levis(const BasedRootDatum& d) {
  auto orbits = d.galois_orbits();
  std::vector<Levi> out;
  for (size_t mask = 0; mask < (size_t{1} << orbits.size()); ++mask) {
    Levi s;
    for (size_t o = 0; o < orbits.size(); ++o)
      if (mask & (size_t{1} << o)) s.insert(s.end(), orbits[o].begin(), orbits[o].end());
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return out;
}

}  // namespace

HnDecomposition is_hn_decomposable(const BasedRootDatum& d, const Coweight& delta, const SigmaClass& b) {
  RatVector c = coefficients_below(d, delta, b);
  Levi mb = centralizer_levi(d, b.newton);
  HnDecomposition out;
  for (const auto& m : galois_stable_levis(d)) {
    if (m.size() == d.num_simple() || !levi_contains(m, mb)) continue;
    bool spanned = true;
    for (int j : complement(d, m))
      if (c[j] != 0) spanned = false;
    if (!spanned) continue;
    if (!out.levi || m.size() < out.levi->size()) out.levi = m;
    out.decomposable = true;
  }
  return out;
}

bool indecomposability_coefficient_check(const BasedRootDatum& d, const Coweight& delta, const SigmaClass& b) {
  RatVector c = coefficients_below(d, delta, b);
  for (size_t j = 0; j < d.num_simple(); ++j)
    if (pair(d.simple_roots()[j], b.newton) > 0 && c[j] <= 0) return false;
  return true;
}

MinimalLevi minimal_indecomposable_levi(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b) {
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  Coweight delta = mu_diamond(d, mu);
  RatVector c = coefficients_below(d, delta, b);
  Levi support;
  for (size_t j = 0; j < c.size(); ++j)
    if (c[j] > 0) support.push_back(static_cast<int>(j));
  MinimalLevi out;
  out.m1 = levi_union(centralizer_levi(d, b.newton), support);
  out.kappa_m1 = levi_kappa(d, b, out.m1);
  W0Transfer t = w0_transfer(d, out.m1, mu, out.kappa_m1);
  out.levi = t.levi;
  out.tilde_w0_mu = t.mu;
  BasedRootDatum md = d.levi(out.levi);
  out.b_in_levi = SigmaClass{make_dominant(md, apply_w0(d, b.newton)), t.kappa};
  out.eps_levi = t.kappa - md.pi1().project(to_integer(t.mu));
  if (!indecomposability_coefficient_check(md, galois_average(md, t.mu), out.b_in_levi))
    throw InternalError("transported triple is HN-decomposable in " + format_levi(out.levi));
  return out;
}

FullyHnReport is_fully_hn_decomposable(const BasedRootDatum& d, const Pi1Element& e, const Coweight& delta,
                                       const EnumerationOptions& opts) {
  FullyHnReport r;
  auto classes = enumerate_generalized(d, e, delta, opts);
  r.classes = classes.size();
  for (const auto& b : classes) {
    if (is_basic(d, b)) continue;
    if (!is_hn_decomposable(d, delta, b).decomposable) r.offending.push_back(b);
  }
  r.fully_decomposable = r.offending.empty();
  return r;
}

FullyHnReport is_fully_hn_decomposable(const BasedRootDatum& d, const Coweight& mu, const EnumerationOptions& opts) {
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  return is_fully_hn_decomposable(d, mu_sharp(d, mu), mu_diamond(d, mu), opts);
}

void require_in_kottwitz_set(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b, const Pi1Element& eps) {
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  if (!eps.same_group(d.pi1().zero()) || !eps.is_torsion()) throw PreconditionError("eps must be torsion in pi_1(G)");
  if (!in_generalized_kottwitz(d, b, mu_sharp(d, mu) + eps, mu_diamond(d, mu)))
    throw PreconditionError(b.to_string() + " is not in B(G, mu_sharp + eps, mu_diamond)");
  if (!is_realizable(d, b)) throw PreconditionError(b.to_string() + " is not the invariant of a class");
}

WaReport wa_equals_a(const BasedRootDatum& d, const Coweight& mu, const SigmaClass& b, const Pi1Element& eps,
                     const EnumerationOptions& opts) {
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  if (!is_minuscule(d, mu)) throw PreconditionError("mu " + format_coweight(mu) + " is not minuscule");
  require_in_kottwitz_set(d, mu, b, eps);

  MinimalLevi ml = minimal_indecomposable_levi(d, mu, b);
  WaReport r;
  r.levi = ml.m1;
  r.transferred_levi = ml.levi;
  BasedRootDatum m1 = d.levi(ml.m1);
  r.basic_in_levi = is_basic(m1, b);
  FullyHnReport full = is_fully_hn_decomposable(m1, ml.kappa_m1, galois_average(m1, mu), opts);
  r.offending = full.offending;
  bool equal = r.basic_in_levi && full.fully_decomposable;

  // the same verdict must come out of the w0-transported data
  BasedRootDatum mt = d.levi(ml.levi);
  bool basic_t = is_basic(mt, ml.b_in_levi);
  FullyHnReport full_t = is_fully_hn_decomposable(mt, ml.b_in_levi.kappa, galois_average(mt, ml.tilde_w0_mu), opts);
  if (basic_t != r.basic_in_levi || full_t.fully_decomposable != full.fully_decomposable)
    throw InternalError("w0 transfer changed the wa=a verdict");

  r.verdict = equal ? Verdict::Equal : Verdict::NotEqual;
  std::string levi_text = ml.m1.size() == d.num_simple() ? std::string("G") : format_levi(ml.m1);
  if (equal)
    r.explanation = "M=" + levi_text + ": b is basic in M and the Kottwitz set of M is fully HN-decomposable";
  else if (!r.basic_in_levi)
    r.explanation = "M=" + levi_text + ": b is not basic in M";
  else
    r.explanation = "M=" + levi_text + ": " + std::to_string(full.offending.size()) +
                    " non-basic HN-indecomposable class(es) in the Kottwitz set of M";
  return r;
}

}  // namespace kottwitz
