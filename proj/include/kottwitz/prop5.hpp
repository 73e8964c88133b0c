#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kottwitz/enumeration.hpp"
#include "kottwitz/slope_bundle.hpp"

namespace kottwitz {

enum class Prop5Shape { TwoPart, ThreePart };

// E_b = O([s/r]) with target O([2/r1]) + O([-2/r2]) (r3 = 0) or O([1/r1]) + O([0/r2]) + O([-1/r3]).
struct Prop5Config {
  Prop5Shape shape = Prop5Shape::ThreePart;
  long r1 = 0, r2 = 0, r3 = 0;
  long s = 0;
  long rank() const { return r1 + r2 + r3; }
  std::string to_string() const;
};

// The target is an HN-indecomposable lower modification of O([s/r]) of degree drop s.
bool prop5_config_valid(const Prop5Config& c);
// (s-1)/(r-r1) <= (r3-1)/r3 and (s-r3+1)/(r-r3) >= 1/r1, in integers.
bool prop5_first_inequality(const Prop5Config& c);
bool prop5_second_inequality(const Prop5Config& c);

SlopeBundle prop5_target(const Prop5Config& c);
// Reads the shape of a target bundle; r2 = 0 is allowed for the three-part shape only when
// `allow_empty_middle` is set (then the bundle is O([1/r1]) + O([-1/r3])).
std::optional<Prop5Config> classify_prop5_shape(const SlopeBundle& target, long s, bool allow_empty_middle);

struct Prop5Witness {
  Prop5Config config;
  std::string branch;  // "s<=r2", "s>r2", "first", "second"
  SlopeBundle e_sub, e_quot;          // 0 -> E' -> E_b -> E'' -> 0, both semistable
  SlopeBundle target_sub, target_quot;  // 0 -> E~' -> E_b' -> E~'' -> 0
  bool config_valid = false;
  bool target_matches = false;    // E~' + E~'' is the target
  bool extension_ok = false;
  bool sub_modification_ok = false;   // E~' is a minuscule-type modification of E'
  bool quot_modification_ok = false;  // E~'' is a minuscule-type modification of E''
  bool valid() const {
    return config_valid && target_matches && extension_ok && sub_modification_ok && quot_modification_ok;
  }
};

// Throws PreconditionError when E_b is not isoclinic, ranks differ, the target is E_b itself
// (trivial stratum) or the target has neither shape.
Prop5Witness prop5_witness(const SlopeBundle& e_b, const SlopeBundle& target);
Prop5Witness prop5_witness(const Prop5Config& c);

struct Prop5ScanReport {
  long bound = 0;
  long configurations = 0;  // valid configurations checked
  long skipped = 0;         // (r1, r2, r3, s) outside the valid window
  long witness_failures = 0;
  std::vector<Prop5Config> counterexamples;
};
// All r_i in [1, bound] and 0 <= s <= r.
Prop5ScanReport prop5_disjunction_scan(long bound, Exec exec = Exec::Parallel, bool check_witnesses = false);

}  // namespace kottwitz
