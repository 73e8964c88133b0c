#include "kottwitz/levi.hpp"

#include <algorithm>
#include <set>

#include "kottwitz/errors.hpp"
#include "kottwitz/weyl.hpp"

namespace kottwitz {

Levi complement(const BasedRootDatum& g, const Levi& m) {
  std::set<int> in(m.begin(), m.end());
  Levi out;
  for (size_t i = 0; i < g.num_simple(); ++i)
    if (!in.count(static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

Levi levi_union(const Levi& a, const Levi& b) {
  std::set<int> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return Levi(s.begin(), s.end());
}

bool levi_contains(const Levi& big, const Levi& small) {
  std::set<int> s(big.begin(), big.end());
  return std::all_of(small.begin(), small.end(), [&](int i) { return s.count(i) > 0; });
}

Levi w0_conjugate_levi(const BasedRootDatum& g, const Levi& m) {
  Levi out;
  for (int i : m) out.push_back(g.tau()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Representatives of the Galois orbits outside M.
std::vector<int> outside_orbit_reps(const BasedRootDatum& g, const Levi& m) {
  std::set<int> in(m.begin(), m.end());
  std::vector<int> reps;
  for (const auto& orbit : g.galois_orbits())
    if (!in.count(orbit.front())) reps.push_back(orbit.front());
  return reps;
}

}  // namespace

std::optional<RatVector> preceq_coefficients(const BasedRootDatum& g, const Levi& m, const RatVector& f1,
                                             const RatVector& f2) {
  BasedRootDatum md = g.levi(m);
  const Pi1Group& pm = md.pi1();
  if (f1.size() != pm.free_rank() || f2.size() != pm.free_rank())
    throw InvalidArgument("preceq: elements do not belong to pi_1 of the given levi");
  auto reps = outside_orbit_reps(g, m);
  RatMatrix a(pm.free_rank(), RatVector(reps.size()));
  for (size_t k = 0; k < reps.size(); ++k) {
    RatVector img = pm.project_rational(cw_from(g.simple_coroots()[reps[k]]));
    for (size_t r = 0; r < img.size(); ++r) a[r][k] = img[r];
  }
  RatVector diff(f2.size());
  for (size_t r = 0; r < diff.size(); ++r) diff[r] = f2[r] - f1[r];
  if (reps.empty()) {
    if (std::any_of(diff.begin(), diff.end(), [](const Rational& q) { return q != 0; })) return std::nullopt;
    return RatVector{};
  }
  auto n = solve_unique(a, diff);
  if (!n) return std::nullopt;
  if (std::any_of(n->begin(), n->end(), [](const Rational& q) { return q < 0; })) return std::nullopt;
  return n;
}

bool preceq_M_rational(const BasedRootDatum& g, const Levi& m, const RatVector& f1, const RatVector& f2) {
  return preceq_coefficients(g, m, f1, f2).has_value();
}

bool preceq_M(const BasedRootDatum& g, const Levi& m, const Pi1Element& e1, const Pi1Element& e2, bool rational) {
  if (!e1.same_group(e2)) throw InvalidArgument("preceq: elements from mismatched groups");
  BasedRootDatum md = g.levi(m);
  if (e1.group().key() != md.pi1().key()) throw InvalidArgument("preceq: elements do not belong to pi_1 of the levi");
  auto n = preceq_coefficients(g, m, to_rational(e1.free_part()), to_rational(e2.free_part()));
  if (!n) return false;
  if (rational) return true;
  if (!is_integral(*n)) return false;
  auto reps = outside_orbit_reps(g, m);
  Pi1Element sum = md.pi1().zero();
  for (size_t k = 0; k < reps.size(); ++k)
    sum = sum + md.pi1().project(g.simple_coroots()[reps[k]]).scaled((*n)[k].get_num());
  return sum == e2 - e1;
}

IntVector apply_w0(const BasedRootDatum& g, const IntVector& x) {
  const auto& w = g.w0_matrix();
  IntVector y(x.size(), 0);
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = 0; b < x.size(); ++b)
      if (w[a][b] != 0) y[a] += w[a][b] * x[b];
  return y;
}

W0Transfer w0_transfer(const BasedRootDatum& g, const Levi& m, const Coweight& mu, const Pi1Element& e) {
  if (!is_dominant(g, mu)) throw PreconditionError("w0_transfer: mu must be dominant");
  BasedRootDatum md = g.levi(m);
  if (e.group().key() != md.pi1().key()) throw InvalidArgument("w0_transfer: element not in pi_1 of the levi");
  Levi target = w0_conjugate_levi(g, m);
  BasedRootDatum td = g.levi(target);
  Coweight w0mu = make_dominant(td, apply_w0(g, mu));
  IntVector moved = apply_w0(g, md.pi1().lift(e));
  return W0Transfer{target, w0mu, td.pi1().project(moved)};
}

}  // namespace kottwitz
