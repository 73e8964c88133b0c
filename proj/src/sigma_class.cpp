#include "kottwitz/sigma_class.hpp"

#include <algorithm>
#include <numeric>

#include "kottwitz/errors.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

namespace {

void require_gl(const BasedRootDatum& gl) {
  if (!gl.is_permutation_type() || gl.galois_order() != 1 || gl.coordinate_blocks().size() != 1)
    throw InvalidArgument("expected a split GL_n datum, got " + gl.type_label());
}

void require_group(const BasedRootDatum& d, const Pi1Element& e) {
  if (e.group().key() != d.pi1().key())
    throw InvalidArgument("kappa lives in pi_1 of " + e.group().key() + ", expected " + d.pi1().key());
}

}  // namespace

std::string SigmaClass::to_string() const {
  return "nu=" + format_coweight(newton) + " kappa=" + kappa.to_string();
}

SigmaClass newton_kappa_of_gln(const BasedRootDatum& gl, const GlnRepresentative& rep) {
  require_gl(gl);
  const size_t n = gl.rank();
  if (rep.perm.size() != n || rep.exponents.size() != n) throw InvalidArgument("representative has wrong size");
  std::vector<bool> seen(n, false);
  for (int p : rep.perm)
    if (p < 0 || static_cast<size_t>(p) >= n || seen[p]) throw InvalidArgument("perm is not a permutation");
    else seen[p] = true;
  std::fill(seen.begin(), seen.end(), false);
  Coweight slopes;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Integer sum = 0;
    long length = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      sum += rep.exponents[j];
      ++length;
      j = static_cast<size_t>(rep.perm[j]);
    }
    Rational slope = make_rational(sum, Integer(length));
    for (long k = 0; k < length; ++k) slopes.push_back(slope);
  }
  std::sort(slopes.begin(), slopes.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return SigmaClass{slopes, gl.pi1().project(rep.exponents)};
}

GlnRepresentative gln_representative(const SigmaClass& b) {
  const auto& nu = b.newton;
  GlnRepresentative rep;
  rep.perm.resize(nu.size());
  rep.exponents.assign(nu.size(), 0);
  size_t i = 0;
  while (i < nu.size()) {
    size_t j = i;
    while (j < nu.size() && nu[j] == nu[i]) ++j;
    const Integer& q = nu[i].get_den();
    Integer mult = static_cast<unsigned long>(j - i);
    if (mult % q != 0) throw PreconditionError("slope " + format_rational(nu[i]) + " has non-realizable multiplicity");
    size_t len = q.get_ui();
    for (size_t start = i; start < j; start += len) {
      for (size_t k = 0; k < len; ++k) rep.perm[start + k] = static_cast<int>(start + (k + 1) % len);
      rep.exponents[start] = nu[i].get_num();
    }
    i = j;
  }
  return rep;
}

bool is_basic(const BasedRootDatum& d, const SigmaClass& b) {
  for (const auto& r : d.simple_roots())
    if (pair(r, b.newton) != 0) return false;
  return true;
}

Coweight basic_newton(const BasedRootDatum& d, const Coweight& lift) { return galois_average(d, weyl_average(d, lift)); }

SigmaClass basic_class_from_kappa(const BasedRootDatum& d, const Pi1Element& e, const Coweight& mu_lift) {
  require_group(d, e);
  if (!is_integral(mu_lift)) throw PreconditionError("lift must be an integral cocharacter");
  if (d.pi1().project(to_integer(mu_lift)) != e) throw PreconditionError("lift does not project to the given element");
  return SigmaClass{basic_newton(d, mu_lift), e};
}

SigmaClass basic_class_from_kappa(const BasedRootDatum& d, const Pi1Element& e) {
  require_group(d, e);
  return basic_class_from_kappa(d, e, cw_from(d.pi1().lift(e)));
}

bool has_consistent_invariants(const BasedRootDatum& d, const SigmaClass& b) {
  if (b.newton.size() != d.rank() || !b.kappa.same_group(d.pi1().zero())) return false;
  if (!is_dominant(d, b.newton) || !is_galois_fixed(d, b.newton)) return false;
  return d.pi1().project_rational(b.newton) == to_rational(b.kappa.free_part());
}

std::optional<IntVector> kottwitz_lift(const BasedRootDatum& d, const SigmaClass& b) {
  require_group(d, b.kappa);
  if (!has_consistent_invariants(d, b)) return std::nullopt;
  BasedRootDatum md = d.levi(centralizer_levi(d, b.newton));
  RatVector y = md.pi1().project_rational(b.newton);
  if (!is_integral(y)) return std::nullopt;
  IntVector free = to_integer(y);
  std::optional<IntVector> found;
  for (const auto& t : md.pi1().torsion_elements()) {
    Pi1Element km = md.pi1().make(t.torsion_part(), free);
    IntVector lam = md.pi1().lift(km);
    if (d.pi1().project(lam) != b.kappa) continue;
    if (basic_newton(md, cw_from(lam)) != b.newton) continue;
    if (found) throw InternalError("two Levi Kottwitz points give the same class " + b.to_string());
    found = lam;
  }
  return found;
}

bool is_realizable(const BasedRootDatum& d, const SigmaClass& b) { return kottwitz_lift(d, b).has_value(); }

Pi1Element levi_kappa(const BasedRootDatum& d, const SigmaClass& b, const Levi& m) {
  if (!levi_contains(m, centralizer_levi(d, b.newton)))
    throw PreconditionError("levi " + format_levi(m) + " does not contain the centralizer of the Newton point");
  auto lam = kottwitz_lift(d, b);
  if (!lam) throw PreconditionError("not the invariant of a sigma-conjugacy class: " + b.to_string());
  return d.levi(m).pi1().project(*lam);
}

SigmaClass class_in_levi(const BasedRootDatum& d, const SigmaClass& b, const Levi& m) {
  return SigmaClass{b.newton, levi_kappa(d, b, m)};
}

bool in_generalized_kottwitz(const BasedRootDatum& d, const SigmaClass& b, const Pi1Element& e,
                             const Coweight& delta) {
  if (!b.kappa.same_group(e)) return false;
  return b.kappa == e && dominance_leq(d, b.newton, delta);
}

bool class_order(const BasedRootDatum& d, const SigmaClass& a, const SigmaClass& b) {
  Rational ha = height(d, a.newton), hb = height(d, b.newton);
  if (ha != hb) return ha < hb;
  if (a.newton != b.newton) return a.newton < b.newton;
  return a.kappa < b.kappa;
}

}  // namespace kottwitz
