#include "kottwitz/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "kottwitz/errors.hpp"

namespace kottwitz {

namespace {

struct SmallVectorHash {
  size_t operator()(const SmallVector& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Integer image of x after clearing denominators.
SmallVector scaled_integral(const Coweight& x, Integer& scale) {
  scale = lcm_of_denominators(x);
  SmallVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    Integer v = x[i].get_num() * (scale / x[i].get_den());
    if (!v.fits_slong_p()) throw OrbitCapExceeded("orbit coordinates exceed machine integers");
    out[i] = v.get_si();
  }
  return out;
}

Coweight unscale(const SmallVector& v, const Integer& scale) {
  Coweight out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = make_rational(Integer(v[i]), scale);
  return out;
}

std::vector<Coweight> permutation_orbit(const BasedRootDatum& d, const Coweight& x, size_t cap) {
  const auto& blocks = d.coordinate_blocks();
  std::vector<std::vector<Rational>> values;
  for (const auto& b : blocks) {
    std::vector<Rational> v;
    for (int i : b) v.push_back(x[i]);
    std::sort(v.begin(), v.end());
    values.push_back(v);
  }
  // multinomial size of the orbit, checked before materialising it
  long double count = 1;
  for (const auto& v : values) {
    size_t run = 0;
    for (size_t t = 0; t < v.size(); ++t) {
      run = (t > 0 && v[t] == v[t - 1]) ? run + 1 : 1;
      count *= static_cast<long double>(t + 1) / static_cast<long double>(run);
    }
  }
  if (count > static_cast<long double>(cap)) throw OrbitCapExceeded("weyl orbit exceeds cap of " + std::to_string(cap));
  std::vector<Coweight> out;
  std::function<void(size_t, Coweight&)> rec = [&](size_t k, Coweight& acc) {
    if (k == blocks.size()) {
      out.push_back(acc);
      return;
    }
    std::vector<Rational> w = values[k];
    do {
      for (size_t t = 0; t < w.size(); ++t) acc[blocks[k][t]] = w[t];
      rec(k + 1, acc);
    } while (std::next_permutation(w.begin(), w.end()));
  };
  Coweight acc = x;
  rec(0, acc);
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

}  // namespace

bool lex_greater(const Coweight& a, const Coweight& b) { return b < a; }

Coweight reflect(const BasedRootDatum& d, int node, const Coweight& x) {
  Rational k = pair(d.simple_roots()[node], x);
  if (k == 0) return x;
  Coweight y = x;
  const auto& c = d.simple_coroots()[node];
  for (size_t a = 0; a < y.size(); ++a)
    if (c[a] != 0) y[a] -= k * c[a];
  return y;
}

SmallVector reflect(const BasedRootDatum& d, int node, const SmallVector& x) {
  long k = pair(d.simple_roots()[node], x);
  if (k == 0) return x;
  SmallVector y = x;
  const auto& c = d.simple_coroots()[node];
  for (size_t a = 0; a < y.size(); ++a) y[a] -= k * c[a];
  return y;
}

bool is_dominant(const BasedRootDatum& d, const Coweight& x) {
  for (const auto& r : d.simple_roots())
    if (pair(r, x) < 0) return false;
  return true;
}

bool is_dominant(const BasedRootDatum& d, const SmallVector& x) {
  for (const auto& r : d.simple_roots())
    if (pair(r, x) < 0) return false;
  return true;
}

bool is_integral_coweight(const Coweight& x) { return is_integral(x); }

namespace generic {

DominantWalk walk_to_dominant(const BasedRootDatum& d, const Coweight& x) {
  DominantWalk w{x, {}};
  while (true) {
    int found = -1;
    for (size_t i = 0; i < d.num_simple(); ++i)
      if (pair(d.simple_roots()[i], w.dominant) < 0) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) return w;
    w.dominant = reflect(d, found, w.dominant);
    w.word.push_back(found);
  }
}

std::vector<Coweight> weyl_orbit(const BasedRootDatum& d, const Coweight& x, size_t cap) {
  if (x.size() != d.rank()) throw InvalidArgument("weyl_orbit: dimension mismatch");
  Integer scale;
  SmallVector start = scaled_integral(x, scale);
  std::unordered_set<SmallVector, SmallVectorHash> seen{start};
  std::deque<SmallVector> queue{start};
  while (!queue.empty()) {
    SmallVector v = std::move(queue.front());
    queue.pop_front();
    for (size_t i = 0; i < d.num_simple(); ++i) {
      if (pair(d.simple_roots()[i], v) == 0) continue;
      SmallVector y = reflect(d, static_cast<int>(i), v);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw OrbitCapExceeded("weyl orbit exceeds cap of " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Coweight> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(unscale(v, scale));
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

Coweight weyl_average(const BasedRootDatum& d, const Coweight& x, size_t cap) {
  auto orbit = generic::weyl_orbit(d, x, cap);
  Coweight sum(x.size());
  for (const auto& v : orbit) sum = cw_add(sum, v);
  return cw_scale(sum, Rational(1, static_cast<long>(orbit.size())));
}

}  // namespace generic

DominantWalk walk_to_dominant(const BasedRootDatum& d, const Coweight& x) {
  if (x.size() != d.rank()) throw InvalidArgument("walk_to_dominant: dimension mismatch");
  return generic::walk_to_dominant(d, x);
}

Coweight make_dominant(const BasedRootDatum& d, const Coweight& x) {
  if (x.size() != d.rank()) throw InvalidArgument("make_dominant: dimension mismatch");
  if (d.is_permutation_type()) {
    Coweight y = x;
    for (const auto& b : d.coordinate_blocks()) {
      std::vector<Rational> v;
      for (int i : b) v.push_back(y[i]);
      std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& c) { return a > c; });
      for (size_t t = 0; t < b.size(); ++t) y[b[t]] = v[t];
    }
    return y;
  }
  return generic::walk_to_dominant(d, x).dominant;
}

std::vector<Coweight> weyl_orbit(const BasedRootDatum& d, const Coweight& x, size_t cap) {
  if (x.size() != d.rank()) throw InvalidArgument("weyl_orbit: dimension mismatch");
  if (d.is_permutation_type()) return permutation_orbit(d, x, cap);
  return generic::weyl_orbit(d, x, cap);
}

Coweight weyl_average(const BasedRootDatum& d, const Coweight& x) {
  if (x.size() != d.rank()) throw InvalidArgument("weyl_average: dimension mismatch");
  if (d.is_permutation_type()) {
    Coweight y = x;
    for (const auto& b : d.coordinate_blocks()) {
      Rational s = 0;
      for (int i : b) s += x[i];
      s /= static_cast<long>(b.size());
      for (int i : b) y[i] = s;
    }
    return y;
  }
  // x minus the unique coroot combination that makes it orthogonal to every simple root
  const size_t n = d.num_simple();
  if (n == 0) return x;
  RatVector p(n);
  for (size_t j = 0; j < n; ++j) p[j] = pair(d.simple_roots()[j], x);
  RatVector c = mat_vec(d.inverse_cartan(), p);
  Coweight y = x;
  for (size_t k = 0; k < n; ++k)
    if (c[k] != 0)
      for (size_t a = 0; a < y.size(); ++a)
        if (d.simple_coroots()[k][a] != 0) y[a] -= c[k] * d.simple_coroots()[k][a];
  return y;
}

Coweight galois_apply(const BasedRootDatum& d, const Coweight& x) {
  const auto& g = d.galois_matrix();
  Coweight y(x.size());
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = 0; b < x.size(); ++b)
      if (g[a][b] != 0) y[a] += g[a][b] * x[b];
  return y;
}

Coweight galois_average(const BasedRootDatum& d, const Coweight& x) {
  if (x.size() != d.rank()) throw InvalidArgument("galois_average: dimension mismatch");
  if (d.galois_order() == 1) return x;
  Coweight sum = x, cur = x;
  for (int k = 1; k < d.galois_order(); ++k) {
    cur = galois_apply(d, cur);
    sum = cw_add(sum, cur);
  }
  return cw_scale(sum, Rational(1, d.galois_order()));
}

bool is_galois_fixed(const BasedRootDatum& d, const Coweight& x) { return galois_apply(d, x) == x; }

Coweight apply_w0(const BasedRootDatum& d, const Coweight& x) {
  const auto& m = d.w0_matrix();
  Coweight y(x.size());
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = 0; b < x.size(); ++b)
      if (m[a][b] != 0) y[a] += m[a][b] * x[b];
  return y;
}

std::optional<RatVector> dominance_difference(const BasedRootDatum& d, const Coweight& v1, const Coweight& v2) {
  if (v1.size() != d.rank() || v2.size() != d.rank()) throw InvalidArgument("dominance: dimension mismatch");
  return d.coroot_coefficients(cw_sub(v2, v1));
}

bool dominance_leq(const BasedRootDatum& d, const Coweight& v1, const Coweight& v2) {
  auto c = dominance_difference(d, v1, v2);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; });
}

bool is_minuscule(const BasedRootDatum& d, const Coweight& mu) {
  for (const auto& r : d.positive_roots()) {
    Rational k = pair(r, mu);
    if (k > 1 || k < -1 || !is_integral(k)) return false;
  }
  return true;
}

Rational height(const BasedRootDatum& d, const Coweight& x) { return pair(d.two_rho(), x); }

Levi centralizer_levi(const BasedRootDatum& d, const Coweight& x) {
  Levi out;
  for (size_t j = 0; j < d.num_simple(); ++j)
    if (pair(d.simple_roots()[j], x) == 0) out.push_back(static_cast<int>(j));
  return out;
}

}  // namespace kottwitz
