#pragma once
// Brute-force references used by the tests. They share no code with the library beyond
// the GMP number types.

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Newton points of B(GL_n, mu): decreasing slope vectors whose polygon has integral break
// points, ends at (n, |mu|) and lies on or below the Hodge polygon of the dominant mu.
inline std::vector<QVec> gl_newton_points(const std::vector<long>& mu_in) {
  std::vector<long> mu = mu_in;
  std::sort(mu.rbegin(), mu.rend());
  const long n = static_cast<long>(mu.size());
  std::vector<long> hodge(n + 1, 0);
  for (long i = 0; i < n; ++i) hodge[i + 1] = hodge[i] + mu[i];
  std::vector<QVec> out;
  // segments (length, rise) with strictly decreasing slopes
  std::vector<std::pair<long, long>> segs;
  auto rec = [&](auto&& self, long x, long y, bool has_prev, Q prev_slope) -> void {
    if (x == n) {
      if (y != hodge[n]) return;
      QVec nu;
      for (auto [len, rise] : segs)
        for (long k = 0; k < len; ++k) nu.push_back(Q(rise, len));
      for (auto& q : nu) q.canonicalize();
      out.push_back(nu);
      return;
    }
    for (long len = 1; x + len <= n; ++len) {
      // rise bounded by the Hodge polygon at the segment end
      for (long rise = hodge[x + len] - y; rise >= -1000; --rise) {
        Q slope(rise, len);
        slope.canonicalize();
        if (has_prev && slope >= prev_slope) continue;
        if (rise < static_cast<long>(len) * mu[n - 1]) break;  // slopes never drop below min(mu)
        // stay below the Hodge polygon at interior integer points
        bool ok = true;
        for (long k = 1; k <= len; ++k) {
          Q yk = Q(y) + slope * k;
          if (yk > hodge[x + k]) { ok = false; break; }
        }
        if (!ok) continue;
        segs.emplace_back(len, rise);
        self(self, x + len, y + rise, true, slope);
        segs.pop_back();
      }
    }
  };
  rec(rec, 0, 0, false, Q(0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Cartan matrix C[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering from 0.
inline std::vector<std::vector<long>> cartan(char family, int n) {
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c[1][2] = -2;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("family");
  }
  return c;
}

// Exact Gaussian elimination; the system is assumed uniquely solvable.
inline QVec solve(std::vector<QVec> a, QVec b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Q f = a[r][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Absolute average of beta^vee over W_M for the Levi M = all nodes not in `removed`:
// the unique beta^vee + sum_{gamma in M} x_gamma gamma^vee orthogonal to every root of M.
// Returns x indexed by node (zero on removed nodes).
inline QVec absolute_average(const std::vector<std::vector<long>>& c, int beta, const std::set<int>& removed) {
  const int n = static_cast<int>(c.size());
  std::vector<int> m;
  for (int i = 0; i < n; ++i)
    if (!removed.count(i)) m.push_back(i);
  QVec x(n, 0);
  if (m.empty()) return x;
  std::vector<QVec> a(m.size(), QVec(m.size()));
  QVec rhs(m.size());
  for (size_t r = 0; r < m.size(); ++r) {
    for (size_t k = 0; k < m.size(); ++k) a[r][k] = c[m[r]][m[k]];
    rhs[r] = -c[m[r]][beta];
  }
  QVec sol = solve(a, rhs);
  for (size_t k = 0; k < m.size(); ++k) x[m[k]] = sol[k];
  return x;
}

// Hodge-polygon check for GL_n: nu below mu in the dominance order.
inline bool gl_dominated(QVec nu, QVec mu) {
  std::sort(nu.rbegin(), nu.rend());
  std::sort(mu.rbegin(), mu.rend());
  Q a = 0, b = 0;
  for (size_t i = 0; i < nu.size(); ++i) {
    a += nu[i];
    b += mu[i];
    if (a > b) return false;
  }
  return a == b;
}

}  // namespace oracle
