#include "kottwitz/average_coroot.hpp"

#include <algorithm>

#include "kottwitz/errors.hpp"
#include "kottwitz/levi.hpp"

namespace kottwitz {

std::vector<OrbitCoefficient> avg_coroot(const BasedRootDatum& d, int beta) {
  if (beta < 0 || static_cast<size_t>(beta) >= d.num_simple()) throw InvalidArgument("avg_coroot: node out of range");
  const auto& cart = d.cartan();
  Levi beta_orbit;
  std::vector<Levi> orbits;
  for (const auto& o : d.galois_orbits()) {
    if (std::find(o.begin(), o.end(), beta) != o.end())
      beta_orbit = o;
    else
      orbits.push_back(o);
  }
  // <alpha, Av(beta^vee)> = 0 for alpha in M_beta. Summed over an orbit P, the pairing with gamma^vee
  // no longer depends on gamma within its orbit O, giving a square system in the orbit sums n_O.
  const size_t k = orbits.size();
  RatMatrix a(k, RatVector(k));
  RatVector rhs(k);
  for (size_t p = 0; p < k; ++p) {
    for (int alpha : orbits[p]) {
      rhs[p] -= cart[alpha][beta];
      for (size_t o = 0; o < k; ++o) a[p][o] += cart[alpha][orbits[o].front()];
    }
  }
  auto sol = solve_unique(a, rhs);
  if (!sol) throw InternalError("average coroot system is inconsistent");
  std::vector<OrbitCoefficient> out;
  for (size_t o = 0; o < k; ++o) out.push_back({orbits[o], (*sol)[o]});
  return out;
}

namespace {

Levi all_but(int n, std::initializer_list<int> removed) {
  Levi out;
  for (int i = 0; i < n; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
  return out;
}

Levi range_nodes(int lo, int hi) {
  Levi out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<Levi> component_sequence(const ComponentSpec& c) {
  const int n = c.family == Family::GL ? c.rank - 1 : c.rank;
  const Levi all = range_nodes(0, n - 1);
  switch (c.family) {
    case Family::GL:
    case Family::A:
      if (c.galois_order == 2 && n % 2 == 1) return {all_but(n, {n / 2}), all};
      return {all};
    case Family::B:
      return {range_nodes(0, n - 2), all};
    case Family::C:
      return {all};
    case Family::D:
      if (c.galois_order == 3) return {all_but(n, {1}), all};
      if (c.galois_order == 2 || n == 4) return {all};
      return {all_but(n, {n - 2, n - 1}), all};
    case Family::E:
      if (n == 6 && c.galois_order == 2) return {{2, 4}, {0, 2, 4, 5}, {0, 2, 3, 4, 5}, all};
      if (n == 6) return {{3}, {1, 2, 3, 4}, all};
      if (n == 7) return {{3}, {2, 3, 4}, all_but(7, {6}), all};
      return {{3}, {3, 4}, {2, 3, 4, 5}, all_but(8, {7}), all};
    case Family::F:
      return {{1}, {0, 1, 2}, all};
    case Family::G:
      return {{1}, all};
  }
  throw InvalidArgument("no I-sequence for this family");
}

}  // namespace

std::vector<Levi> i_sequence(const BasedRootDatum& d) {
  if (d.components().empty()) throw InvalidArgument("i_sequence needs a datum built from components");
  std::vector<std::vector<Levi>> parts;
  size_t len = 0;
  for (const auto& comp : d.components()) {
    auto seq = component_sequence(comp.spec);
    for (auto& s : seq)
      for (int& v : s) v += comp.node_offset;
    len = std::max(len, seq.size());
    parts.push_back(std::move(seq));
  }
  std::vector<Levi> out(len);
  for (size_t i = 0; i < len; ++i) {
    for (const auto& seq : parts) {
      const Levi& s = seq[std::min(i, seq.size() - 1)];
      out[i].insert(out[i].end(), s.begin(), s.end());
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

std::vector<ISequenceViolation> check_i_sequence(const BasedRootDatum& d, const std::vector<Levi>& seq) {
  std::vector<ISequenceViolation> out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (!d.is_galois_stable(seq[i])) throw InvalidArgument("I-sequence entry " + format_levi(seq[i]) + " is not Galois stable");
    if (i > 0 && !levi_contains(seq[i], seq[i - 1])) throw InvalidArgument("I-sequence is not increasing");
    const Levi prev = i == 0 ? Levi{} : seq[i - 1];
    for (int beta : seq[i]) {
      for (const auto& c : avg_coroot(d, beta)) {
        if (levi_contains(prev, c.orbit)) continue;
        if (c.value > 1) out.push_back({beta, i, c.orbit, c.value});
      }
    }
  }
  return out;
}

}  // namespace kottwitz
