#pragma once

#include <string>
#include <vector>

#include "kottwitz/coweight.hpp"

namespace kottwitz {

// Direct sum of stable bundles O(lambda) on the Fargues-Fontaine curve. The stable bundle of
// slope p/q (lowest terms) has rank q and degree p.
class SlopeBundle {
 public:
  struct Summand {
    Rational slope;
    long copies;
    bool operator==(const Summand& o) const { return slope == o.slope && copies == o.copies; }
  };

  SlopeBundle() = default;
  // Normalises: merges equal slopes, drops zero copies, sorts by decreasing slope.
  explicit SlopeBundle(std::vector<Summand> summands);

  // O([s/r]) := O(s/r)^gcd(s,r), of degree s and rank r.
  static SlopeBundle of_degree_rank(const Integer& s, long r);
  // Tokens "s/r×d" (also "s/rxd" or "s/r*d") separated by commas; "s/r" alone means d = 1.
  static SlopeBundle parse(const std::string& text);

  const std::vector<Summand>& summands() const { return summands_; }
  long rank() const;
  Integer degree() const;
  bool empty() const { return summands_.empty(); }
  bool is_semistable() const { return summands_.size() <= 1; }
  // slope of a semistable bundle (degree / rank in general)
  Rational slope() const;
  // HN slope vector, decreasing, one entry per unit of rank.
  Coweight nu() const;
  // Pieces of the HN polygon: (rank, degree) of each isotypic part.
  std::vector<std::pair<long, Integer>> isotypic_parts() const;

  SlopeBundle operator+(const SlopeBundle& other) const;  // direct sum
  bool operator==(const SlopeBundle& other) const { return summands_ == other.summands_; }
  bool operator!=(const SlopeBundle& other) const { return !(*this == other); }

  std::string to_string() const;      // "2/1×1,-2/3×1"
  std::string display() const;        // "O(2)+O(-2/3)"

 private:
  std::vector<Summand> summands_;
};

}  // namespace kottwitz
