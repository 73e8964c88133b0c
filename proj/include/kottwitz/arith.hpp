#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kottwitz {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

// Structural data (roots, Cartan entries, Galois matrices) is tiny; machine ints suffice.
using SmallVector = std::vector<long>;
using SmallMatrix = std::vector<SmallVector>;

Rational make_rational(const Integer& num, const Integer& den);

// Always "p/q", denominators included even when 1.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Comma separated lists, whitespace tolerant.
RatVector parse_rational_list(std::string_view text);
IntVector parse_integer_list(std::string_view text);

bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);
RatVector to_rational(const IntVector& v);
RatVector to_rational(const SmallVector& v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer lcm_of_denominators(const RatVector& v);
Integer lcm_range(long n);

// Unique solution of a x = b for a of full column rank; nullopt when inconsistent.
// Throws InternalError when the columns of a are dependent.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);
RatMatrix inverse(const RatMatrix& a);
RatVector mat_vec(const RatMatrix& a, const RatVector& x);

}  // namespace kottwitz
