#pragma once

#include <string>

#include "kottwitz/arith.hpp"
#include "kottwitz/coweight.hpp"
#include "kottwitz/enumeration.hpp"
#include "kottwitz/levi.hpp"
#include "kottwitz/weyl.hpp"
#include "kottwitz/root_datum.hpp"
#include "kottwitz/sigma_class.hpp"

namespace testing {

using namespace kottwitz;

inline Coweight cw(const std::string& text) { return parse_rational_list(text); }

inline Coweight omega(int n, int r) {
  Coweight mu(n, Rational(0));
  for (int i = 0; i < r; ++i) mu[i] = 1;
  return mu;
}

inline SigmaClass gl_class(const BasedRootDatum& gl, const std::string& nu) {
  Coweight v = cw(nu);
  Rational s = 0;
  for (const auto& x : v) s += x;
  return SigmaClass{v, gl.pi1().make({}, {Integer(s)})};
}

inline SigmaClass gl_basic(const BasedRootDatum& gl, long kappa) {
  return basic_class_from_kappa(gl, gl.pi1().make({}, {Integer(kappa)}));
}

inline EnumerationOptions serial() { return {std::nullopt, Exec::Serial}; }

}  // namespace testing
