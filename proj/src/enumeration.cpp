#include "kottwitz/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>

#include "kottwitz/errors.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/smith.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

namespace {

// The Levi-dependent data of the lattice scan for one centralizer candidate S.
struct LeviPlan {
  Levi s;
  std::vector<Levi> outside;  // Galois orbits not in S
  RatMatrix css_inverse;      // inverse of the Cartan block on S
};

struct Candidate {
  size_t plan;
  RatVector t;  // one coefficient sum per outside orbit
};

void for_each_index(size_t n, Exec exec, const std::function<void(size_t)>& body) {
  if (exec == Exec::Serial) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Lattice points t = offset + basis * m inside the box [0, upper]; basis rows are in
// Hermite form so that coordinate i only depends on m_0..m_i.
void scan_box(const RatVector& offset, const IntMatrix& hermite, const Integer& denom, const RatVector& upper,
              std::vector<RatVector>& out) {
  const size_t k = offset.size();
  RatVector t(k);
  IntVector m(k);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == k) {
      out.push_back(t);
      return;
    }
    Rational partial = offset[i];
    for (size_t r = 0; r < i; ++r)
      if (hermite[r][i] != 0) partial += Rational(m[r] * hermite[r][i]) / denom;
    Rational step = Rational(hermite[i][i]) / denom;
    Integer lo = ceil_of((0 - partial) / step);
    Integer hi = floor_of((upper[i] - partial) / step);
    for (Integer v = lo; v <= hi; ++v) {
      m[i] = v;
      t[i] = partial + step * v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

Integer default_denominator_bound(const BasedRootDatum& d) {
  long m = static_cast<long>(d.num_simple()) + 1;
  if (d.is_permutation_type()) {
    size_t longest = 1;
    for (const auto& b : d.coordinate_blocks()) longest = std::max(longest, b.size());
    m = static_cast<long>(longest);
  }
  // Galois averaging over an orbit of blocks multiplies denominators by the orbit length.
  return lcm_range(m * d.galois_order());
}

Pi1Element mu_sharp(const BasedRootDatum& d, const Coweight& mu) {
  if (!is_integral(mu)) throw PreconditionError("mu must be integral");
  return d.pi1().project(to_integer(mu));
}

Coweight mu_diamond(const BasedRootDatum& d, const Coweight& mu) { return galois_average(d, make_dominant(d, mu)); }

void sort_classes(const BasedRootDatum& d, std::vector<SigmaClass>& classes) {
  std::vector<std::pair<Rational, size_t>> keys;
  for (size_t i = 0; i < classes.size(); ++i) keys.emplace_back(height(d, classes[i].newton), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const auto& ca = classes[a.second];
    const auto& cb = classes[b.second];
    if (ca.newton != cb.newton) return ca.newton < cb.newton;
    return ca.kappa < cb.kappa;
  });
  std::vector<SigmaClass> sorted;
  sorted.reserve(classes.size());
  for (const auto& k : keys) sorted.push_back(classes[k.second]);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  classes = std::move(sorted);
}

std::vector<SigmaClass> enumerate_generalized(const BasedRootDatum& d, const Pi1Element& e, const Coweight& delta,
                                              const EnumerationOptions& opts) {
  if (delta.size() != d.rank()) throw InvalidArgument("delta has wrong dimension");
  if (e.group().key() != d.pi1().key()) throw InvalidArgument("kappa does not belong to pi_1 of " + d.type_label());
  if (!is_dominant(d, delta) || !is_galois_fixed(d, delta))
    throw PreconditionError("delta must be dominant and Galois fixed");
  const Integer bound = opts.denominator_bound.value_or(default_denominator_bound(d));
  if (bound <= 0) throw InvalidArgument("denominator bound must be positive");

  // nu <= delta forces equal images in pi_1 tensor Q
  if (d.pi1().project_rational(delta) != to_rational(e.free_part())) return {};

  const size_t n = d.num_simple();
  const auto& cart = d.cartan();
  RatVector pd(n);
  for (size_t j = 0; j < n; ++j) pd[j] = pair(d.simple_roots()[j], delta);
  RatVector cmax = n ? mat_vec(d.inverse_cartan(), pd) : RatVector{};

  const auto orbits = d.galois_orbits();
  std::vector<LeviPlan> plans;
  std::vector<Candidate> candidates;
  for (size_t mask = 0; mask < (size_t{1} << orbits.size()); ++mask) {
    LeviPlan plan;
    for (size_t o = 0; o < orbits.size(); ++o) {
      if (mask & (size_t{1} << o))
        plan.s.insert(plan.s.end(), orbits[o].begin(), orbits[o].end());
      else
        plan.outside.push_back(orbits[o]);
    }
    std::sort(plan.s.begin(), plan.s.end());
    if (!plan.s.empty()) {
      RatMatrix css(plan.s.size(), RatVector(plan.s.size()));
      for (size_t a = 0; a < plan.s.size(); ++a)
        for (size_t b = 0; b < plan.s.size(); ++b) css[a][b] = cart[plan.s[a]][plan.s[b]];
      plan.css_inverse = inverse(css);
    }
    const size_t k = plan.outside.size();
    BasedRootDatum md = d.levi(plan.s);
    const Pi1Group& pm = md.pi1();
    const size_t f = pm.free_rank();
    RatVector fdelta = pm.project_rational(delta);

    std::vector<RatVector> found;
    if (k == 0) {
      found.emplace_back();
    } else {
      IntMatrix bmat(f, IntVector(k));
      for (size_t o = 0; o < k; ++o) {
        RatVector img = pm.project_rational(cw_from(d.simple_coroots()[plan.outside[o].front()]));
        for (size_t r = 0; r < f; ++r) bmat[r][o] = img[r].get_num();
      }
      SmithForm snf = smith_normal_form(bmat, f, k);
      if (snf.rank != k) throw InternalError("coroot images outside a Levi are dependent");
      RatVector w(f);
      for (size_t r = 0; r < f; ++r)
        for (size_t c = 0; c < f; ++c)
          if (snf.u[r][c] != 0) w[r] += Rational(snf.u[r][c]) * fdelta[c];
      bool consistent = true;
      for (size_t r = k; r < f; ++r)
        if (!is_integral(w[r])) consistent = false;
      if (!consistent) {
        plans.push_back(std::move(plan));
        continue;
      }
      RatVector s0(k);
      for (size_t i = 0; i < k; ++i) s0[i] = w[i] / Rational(snf.diag(i));
      // t = V (s0 + diag(1/e) m)
      RatVector offset(k);
      RatMatrix basis(k, RatVector(k));
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c) {
          offset[r] += Rational(snf.v[r][c]) * s0[c];
          basis[r][c] = Rational(snf.v[r][c]) / Rational(snf.diag(c));
        }
      Integer denom = 1;
      for (const auto& row : basis) denom = lcm(denom, lcm_of_denominators(row));
      IntMatrix generators(k, IntVector(k));  // rows are lattice generators
      for (size_t c = 0; c < k; ++c)
        for (size_t r = 0; r < k; ++r) generators[c][r] = Rational(basis[r][c] * denom).get_num();
      IntMatrix hermite = row_hermite(generators);
      if (hermite.size() != k) throw InternalError("lattice basis lost rank");
      RatVector upper(k);
      for (size_t o = 0; o < k; ++o)
        for (int j : plan.outside[o]) upper[o] += cmax[j];
      scan_box(offset, hermite, denom, upper, found);
    }
    for (auto& t : found) candidates.push_back(Candidate{plans.size(), std::move(t)});
    plans.push_back(std::move(plan));
  }

  std::vector<std::optional<SigmaClass>> results(candidates.size());
  for_each_index(candidates.size(), opts.exec, [&](size_t idx) {
    const Candidate& cand = candidates[idx];
    const LeviPlan& plan = plans[cand.plan];
    RatVector c(n);
    for (size_t o = 0; o < plan.outside.size(); ++o)
      for (int j : plan.outside[o]) c[j] = cand.t[o] / static_cast<long>(plan.outside[o].size());
    if (!plan.s.empty()) {
      RatVector rhs(plan.s.size());
      for (size_t a = 0; a < plan.s.size(); ++a) {
        rhs[a] = pd[plan.s[a]];
        for (const auto& orbit : plan.outside)
          for (int j : orbit) rhs[a] -= cart[plan.s[a]][j] * c[j];
      }
      RatVector cs = mat_vec(plan.css_inverse, rhs);
      for (size_t a = 0; a < plan.s.size(); ++a) {
        if (cs[a] < 0) return;
        c[plan.s[a]] = cs[a];
      }
    }
    Coweight nu = delta;
    for (size_t j = 0; j < n; ++j)
      if (c[j] != 0)
        for (size_t a = 0; a < nu.size(); ++a)
          if (d.simple_coroots()[j][a] != 0) nu[a] -= c[j] * d.simple_coroots()[j][a];
    for (const auto& orbit : plan.outside)
      for (int j : orbit)
        if (pair(d.simple_roots()[j], nu) <= 0) return;
    SigmaClass b{nu, e};
    if (!kottwitz_lift(d, b)) return;
    Integer den = lcm_of_denominators(nu);
    if (bound % den != 0)
      throw DenominatorBoundError("Newton point " + format_coweight(nu) + " needs denominator " + den.get_str() +
                                  ", not dividing the bound " + bound.get_str());
    results[idx] = std::move(b);
  });

  std::vector<SigmaClass> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  sort_classes(d, out);
  return out;
}

std::vector<SigmaClass> enumerate_B_G_mu(const BasedRootDatum& d, const Coweight& mu, const EnumerationOptions& opts) {
  if (mu.size() != d.rank()) throw InvalidArgument("mu has wrong dimension");
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  return enumerate_generalized(d, mu_sharp(d, mu), mu_diamond(d, mu), opts);
}

std::vector<SigmaClass> enumerate_A_G_mu(const BasedRootDatum& d, const Coweight& mu, const EnumerationOptions& opts) {
  if (mu.size() != d.rank()) throw InvalidArgument("mu has wrong dimension");
  if (!is_integral(mu) || !is_dominant(d, mu)) throw PreconditionError("mu must be integral and dominant");
  std::vector<SigmaClass> all;
  for (const auto& eps : d.pi1().torsion_elements()) {
    auto part = enumerate_generalized(d, mu_sharp(d, mu) + eps, mu_diamond(d, mu), opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  sort_classes(d, all);
  return all;
}

LeviRestriction restrict_to_levi(const BasedRootDatum& d, const SigmaClass& b, const Levi& m, const Coweight& mu) {
  Pi1Element km = levi_kappa(d, b, m);
  BasedRootDatum md = d.levi(m);
  for (const auto& lam : weyl_orbit(d, mu)) {
    if (!is_dominant(md, lam)) continue;
    Pi1Element diff = km - md.pi1().project(to_integer(lam));
    if (!diff.is_torsion()) continue;
    if (!dominance_leq(md, b.newton, galois_average(md, lam))) continue;
    return LeviRestriction{lam, diff, SigmaClass{b.newton, km}};
  }
  throw PreconditionError("no W-conjugate of mu bounds " + b.to_string() + " in levi " + format_levi(m));
}

}  // namespace kottwitz
