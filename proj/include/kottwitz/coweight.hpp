#pragma once

#include <string>

#include "kottwitz/arith.hpp"

namespace kottwitz {

// Rational cocharacter in lattice coordinates.
using Coweight = RatVector;

Coweight cw_add(const Coweight& a, const Coweight& b);
Coweight cw_sub(const Coweight& a, const Coweight& b);
Coweight cw_scale(const Coweight& a, const Rational& k);
Coweight cw_neg(const Coweight& a);
Coweight cw_zero(size_t n);
bool cw_is_zero(const Coweight& a);

// <functional, x> for an integral functional.
Rational pair(const SmallVector& functional, const Coweight& x);
long pair(const SmallVector& functional, const SmallVector& x);

Coweight cw_from(const SmallVector& v);
Coweight cw_from(const IntVector& v);

// "(p/q,p/q,...)"
std::string format_coweight(const Coweight& v);
// List of "p/q" strings.
std::vector<std::string> coweight_strings(const Coweight& v);

}  // namespace kottwitz
