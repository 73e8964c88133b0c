#include "kottwitz/smith.hpp"

#include <utility>

#include "kottwitz/errors.hpp"

namespace kottwitz {

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const size_t inner = a[0].size();
  if (b.size() != inner) throw InvalidArgument("mat_mul: dimension mismatch");
  const size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
  IntVector y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvalidArgument("mat_vec: dimension mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Row operation on d together with u (left factor) and u_inv.
struct Tracker {
  IntMatrix& d;
  IntMatrix& u;
  IntMatrix& u_inv;
  IntMatrix& v;

  void swap_rows(size_t i, size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
    for (auto& row : u_inv) std::swap(row[i], row[j]);
  }
  void swap_cols(size_t i, size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i += f * row_j
  void add_row(size_t i, size_t j, const Integer& f) {
    if (f == 0) return;
    for (size_t c = 0; c < d[i].size(); ++c) d[i][c] += f * d[j][c];
    for (size_t c = 0; c < u[i].size(); ++c) u[i][c] += f * u[j][c];
    // inverse: col_j -= f * col_i
    for (auto& row : u_inv) row[j] -= f * row[i];
  }
  // col_i += f * col_j
  void add_col(size_t i, size_t j, const Integer& f) {
    if (f == 0) return;
    for (auto& row : d) row[i] += f * row[j];
    for (auto& row : v) row[i] += f * row[j];
  }
  void negate_row(size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (auto& row : u_inv) row[i] = -row[i];
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, size_t rows, size_t cols) {
  SmithForm s;
  s.d = IntMatrix(rows, IntVector(cols, 0));
  for (size_t i = 0; i < rows; ++i) {
    if (a.size() != rows || a[i].size() != cols) throw InvalidArgument("smith: dimension mismatch");
    s.d[i] = a[i];
  }
  s.u = identity_matrix(rows);
  s.u_inv = identity_matrix(rows);
  s.v = identity_matrix(cols);
  Tracker t{s.d, s.u, s.u_inv, s.v};
  auto& d = s.d;

  size_t k = 0;
  while (k < rows && k < cols) {
    // pivot: smallest non-zero absolute value in the trailing block
    size_t pr = rows, pc = cols;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (d[i][j] != 0 && (pr == rows || abs(d[i][j]) < abs(d[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    t.swap_rows(k, pr);
    t.swap_cols(k, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (d[i][k] == 0) continue;
        t.add_row(i, k, -floor_div(d[i][k], d[k][k]));
        if (d[i][k] != 0) {
          t.swap_rows(k, i);
          clean = false;
        }
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (d[k][j] == 0) continue;
        t.add_col(j, k, -floor_div(d[k][j], d[k][k]));
        if (d[k][j] != 0) {
          t.swap_cols(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      for (size_t i = k + 1; i < rows && clean; ++i)
        for (size_t j = k + 1; j < cols; ++j)
          if (d[i][j] % d[k][k] != 0) {
            t.add_row(k, i, 1);
            clean = false;
            break;
          }
    }
    if (d[k][k] < 0) t.negate_row(k);
    ++k;
  }
  s.rank = k;
  return s;
}

IntMatrix row_hermite(const IntMatrix& a) {
  IntMatrix h = a;
  if (h.empty()) return h;
  const size_t rows = h.size();
  const size_t cols = h[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r..end
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == rows) break;
      std::swap(h[r], h[best]);
      bool done = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Integer q = floor_div(h[i][c], h[r][c]);
        for (size_t j = c; j < cols; ++j) h[i][j] -= q * h[r][j];
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0)
      for (auto& x : h[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h[i][c], h[r][c]);
      if (q != 0)
        for (size_t j = c; j < cols; ++j) h[i][j] -= q * h[r][j];
    }
    ++r;
  }
  h.resize(r);
  return h;
}

}  // namespace kottwitz
