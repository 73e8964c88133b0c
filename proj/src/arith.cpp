#include "kottwitz/arith.hpp"

#include <algorithm>
#include <cctype>

#include "kottwitz/errors.hpp"

namespace kottwitz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  text = trim(text);
  if (text.empty()) return parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(',', start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text)) throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw InvalidArgument("sign in denominator: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  for (auto part : split_commas(text)) out.push_back(parse_rational(part));
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

IntVector parse_integer_list(std::string_view text) {
  IntVector out;
  for (auto part : split_commas(text)) out.push_back(parse_integer(part));
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) throw InvalidArgument("vector is not integral");
    out.push_back(q.get_num());
  }
  return out;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

RatVector to_rational(const SmallVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

Integer lcm_range(long n) {
  Integer l = 1;
  for (long k = 2; k <= n; ++k) {
    Integer kk = k;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
  }
  return l;
}

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw InvalidArgument("solve_unique: dimension mismatch");
  RatMatrix m(rows, RatVector(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < cols; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) throw InternalError("solve_unique: dependent columns");
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  RatVector x(cols);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols] / m[i][pivot_col[i]];
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  const size_t n = a.size();
  RatMatrix m(n, RatVector(2 * n));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidArgument("inverse: matrix not square");
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InternalError("inverse: singular matrix");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (size_t j = 0; j < 2 * n; ++j) m[c][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  RatMatrix out(n, RatVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
  RatVector y(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvalidArgument("mat_vec: dimension mismatch");
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
  }
  return y;
}

}  // namespace kottwitz
