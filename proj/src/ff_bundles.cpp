#include "kottwitz/ff_bundles.hpp"

#include <algorithm>
#include <map>

#include "kottwitz/errors.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

SlopeBundle bundle_of_isocrystal(const Coweight& nu) {
  std::map<Rational, long> mult;
  for (const auto& x : nu) ++mult[x];
  std::vector<SlopeBundle::Summand> parts;
  for (const auto& [slope, m] : mult) {
    long q = slope.get_den().get_si();
    if (m % q != 0)
      throw InvalidArgument("slope " + format_rational(slope) + " occurs " + std::to_string(m) +
                            " times, not a multiple of its denominator");
    parts.push_back({-slope, m / q});
  }
  return SlopeBundle(std::move(parts));
}

Coweight bundle_nu(const SlopeBundle& e) { return e.nu(); }

bool is_split_gln(const BasedRootDatum& d) {
  return d.is_permutation_type() && d.galois_order() == 1 && d.coordinate_blocks().size() == 1 &&
         d.coordinate_blocks().front().size() == d.rank();
}

bool check_nu_formula(const BasedRootDatum& gl, const SigmaClass& b) {
  if (!is_split_gln(gl)) throw InvalidArgument("check_nu_formula needs split GL_n");
  return bundle_nu(bundle_of_isocrystal(b.newton)) == cw_neg(apply_w0(gl, b.newton));
}

Integer chern(const SlopeBundle& e) { return e.degree(); }

Integer modified_chern(const BasedRootDatum& gl, const Coweight& mu, const SigmaClass& b) {
  if (!is_split_gln(gl)) throw InvalidArgument("modified_chern needs split GL_n");
  if (!is_integral(mu)) throw InvalidArgument("mu must be integral");
  Integer s = 0;
  for (const auto& x : mu) s += x.get_num();
  return s - b.kappa.free_part().at(0);
}

bool hom_nonzero(const Rational& lambda1, const Rational& lambda2) { return lambda1 <= lambda2; }
bool h1_vanishes(const Rational& lambda) { return lambda >= 0; }

Pi1Element modification_kappa(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu) {
  return b.kappa - mu_sharp(d, mu);
}

Coweight modification_delta(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu) {
  return make_dominant(d, cw_add(b.newton, galois_average(d, apply_w0(d, cw_neg(make_dominant(d, mu))))));
}

std::vector<Modification> modifications_of_basic(const BasedRootDatum& d, const SigmaClass& b, const Coweight& mu,
                                                 const EnumerationOptions& opts) {
  if (!is_basic(d, b)) throw PreconditionError("modifications_of_basic needs a basic class");
  if (!is_integral(mu)) throw PreconditionError("mu must be integral");
  const bool bundles = is_split_gln(d);
  std::vector<Modification> out;
  for (auto& c : enumerate_generalized(d, modification_kappa(d, b, mu), modification_delta(d, b, mu), opts)) {
    Modification m{c, std::nullopt};
    if (bundles) m.bundle = bundle_of_isocrystal(c.newton);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Polygon of a decreasing slope vector, as partial sums.
std::vector<Rational> polygon(const Coweight& slopes) {
  std::vector<Rational> p(slopes.size() + 1);
  for (size_t i = 0; i < slopes.size(); ++i) p[i + 1] = p[i] + slopes[i];
  return p;
}

bool polygon_below(const Coweight& lower, const Coweight& upper) {
  auto a = polygon(lower);
  auto b = polygon(upper);
  if (a.back() != b.back()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool extension_exists(const SlopeBundle& e, const SlopeBundle& sub, const SlopeBundle& quotient) {
  if (e.rank() != sub.rank() + quotient.rank() || e.degree() != sub.degree() + quotient.degree())
    throw RankDegreeMismatch("rank/degree of E is " + std::to_string(e.rank()) + "/" + e.degree().get_str() +
                             ", of E' + E'' is " + std::to_string(sub.rank() + quotient.rank()) + "/" +
                             Integer(sub.degree() + quotient.degree()).get_str());
  if (sub.empty() || quotient.empty()) return e == sub + quotient;
  if (!sub.is_semistable() || !quotient.is_semistable()) throw PreconditionError("E' and E'' must be semistable");
  const SlopeBundle split = sub + quotient;
  // Ext^1(E'', E') vanishes when E' has the larger slope, so only the split extension exists.
  if (sub.slope() > quotient.slope()) return e == split;
  return polygon_below(e.nu(), split.nu());
}

bool is_minuscule_modification(const SlopeBundle& e, const SlopeBundle& f) {
  if (!e.is_semistable()) throw PreconditionError("is_minuscule_modification needs a semistable E");
  if (e.rank() != f.rank()) return false;
  Integer k = e.degree() - f.degree();
  if (k < 0 || k > e.rank()) return false;
  Coweight bound = e.nu();
  const long r = e.rank();
  for (long i = r - k.get_si(); i < r; ++i) bound[i] -= 1;
  return polygon_below(f.nu(), bound);
}

long jb_graded_dim(const BasedRootDatum& d, const Coweight& nu, const Rational& lambda) {
  long count = 0;
  for (const auto& root : d.positive_roots()) {
    Rational p = pair(root, nu);
    if (p == lambda) ++count;
    if (-p == lambda) ++count;
  }
  return count;
}

Rational jb_lambda_max(const BasedRootDatum& d, const Coweight& nu) {
  Rational best = 0;
  for (const auto& root : d.positive_roots()) best = std::max(best, Rational(abs(pair(root, nu))));
  return best;
}

}  // namespace kottwitz
