#include "kottwitz/coweight.hpp"

#include <algorithm>

#include "kottwitz/errors.hpp"

namespace kottwitz {

namespace {
void same_length(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw InvalidArgument("coweight dimension mismatch");
}
}  // namespace

Coweight cw_add(const Coweight& a, const Coweight& b) {
  same_length(a, b);
  Coweight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Coweight cw_sub(const Coweight& a, const Coweight& b) {
  same_length(a, b);
  Coweight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Coweight cw_scale(const Coweight& a, const Rational& k) {
  Coweight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

Coweight cw_neg(const Coweight& a) { return cw_scale(a, Rational(-1)); }

Coweight cw_zero(size_t n) { return Coweight(n); }

bool cw_is_zero(const Coweight& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

Rational pair(const SmallVector& functional, const Coweight& x) {
  if (functional.size() != x.size()) throw InvalidArgument("pairing dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (functional[i] != 0) s += functional[i] * x[i];
  return s;
}

long pair(const SmallVector& functional, const SmallVector& x) {
  if (functional.size() != x.size()) throw InvalidArgument("pairing dimension mismatch");
  long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += functional[i] * x[i];
  return s;
}

Coweight cw_from(const SmallVector& v) { return to_rational(v); }
Coweight cw_from(const IntVector& v) { return to_rational(v); }

std::string format_coweight(const Coweight& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::vector<std::string> coweight_strings(const Coweight& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

}  // namespace kottwitz
