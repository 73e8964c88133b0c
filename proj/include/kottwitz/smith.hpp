#pragma once

#include "kottwitz/arith.hpp"

namespace kottwitz {

// u * a * v = d with u, v unimodular and d diagonal, d[i][i] | d[i+1][i+1], all >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;
  IntMatrix d;
  size_t rank = 0;  // number of non-zero diagonal entries
  Integer diag(size_t i) const { return i < d.size() && i < d[i].size() ? d[i][i] : Integer(0); }
};

SmithForm smith_normal_form(const IntMatrix& a, size_t rows, size_t cols);

// Row-style Hermite form: the non-zero rows of the result span the same lattice as the rows
// of `a`; pivots are positive and strictly move right, entries above a pivot lie in [0, pivot).
IntMatrix row_hermite(const IntMatrix& a);

IntMatrix identity_matrix(size_t n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVector mat_vec(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& a);

}  // namespace kottwitz
