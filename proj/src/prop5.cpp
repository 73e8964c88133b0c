#include "kottwitz/prop5.hpp"

#include <algorithm>

#include "kottwitz/errors.hpp"
#include "kottwitz/ff_bundles.hpp"

namespace kottwitz {

std::string Prop5Config::to_string() const {
  std::string out = shape == Prop5Shape::TwoPart ? "two-part" : "three-part";
  out += " r=(" + std::to_string(r1) + "," + std::to_string(r2);
  if (shape == Prop5Shape::ThreePart) out += "," + std::to_string(r3);
  return out + ") s=" + std::to_string(s);
}

namespace {

// r * (upper polygon of the modification bound at x), scaled to stay integral
long bound_times_r(long x, long s, long r) { return x * s - r * std::max(0L, x - r + s); }

SlopeBundle o(long deg, long rank) { return rank == 0 ? SlopeBundle() : SlopeBundle::of_degree_rank(deg, rank); }

}  // namespace

bool prop5_config_valid(const Prop5Config& c) {
  const long r = c.rank();
  if (c.r1 <= 0 || c.r2 < 0 || c.s < 0 || c.s > r) return false;
  if (c.shape == Prop5Shape::TwoPart) return c.r2 > 0 && c.r3 == 0 && bound_times_r(c.r1, c.s, r) > 2 * r;
  if (c.r3 <= 0) return false;
  return bound_times_r(c.r1, c.s, r) > r && bound_times_r(c.r1 + c.r2, c.s, r) > r;
}

bool prop5_first_inequality(const Prop5Config& c) { return (c.s - 1) * c.r3 <= (c.r3 - 1) * (c.rank() - c.r1); }

bool prop5_second_inequality(const Prop5Config& c) { return (c.s - c.r3 + 1) * c.r1 >= c.rank() - c.r3; }

SlopeBundle prop5_target(const Prop5Config& c) {
  if (c.shape == Prop5Shape::TwoPart) return o(2, c.r1) + o(-2, c.r2);
  return o(1, c.r1) + o(0, c.r2) + o(-1, c.r3);
}

std::optional<Prop5Config> classify_prop5_shape(const SlopeBundle& target, long s, bool allow_empty_middle) {
  auto parts = target.isotypic_parts();
  Prop5Config c;
  c.s = s;
  if (parts.size() == 2 && parts[0].second == 2 && parts[1].second == -2) {
    c.shape = Prop5Shape::TwoPart;
    c.r1 = parts[0].first;
    c.r2 = parts[1].first;
    return c;
  }
  c.shape = Prop5Shape::ThreePart;
  if (parts.size() == 3 && parts[0].second == 1 && parts[1].second == 0 && parts[2].second == -1) {
    c.r1 = parts[0].first;
    c.r2 = parts[1].first;
    c.r3 = parts[2].first;
    return c;
  }
  if (allow_empty_middle && parts.size() == 2 && parts[0].second == 1 && parts[1].second == -1) {
    c.r1 = parts[0].first;
    c.r3 = parts[1].first;
    return c;
  }
  return std::nullopt;
}

Prop5Witness prop5_witness(const Prop5Config& c) {
  Prop5Witness w;
  w.config = c;
  const long r = c.rank();
  const long s = c.s;
  if (c.shape == Prop5Shape::TwoPart) {
    w.target_sub = o(2, c.r1);
    w.target_quot = o(-2, c.r2);
    if (s <= c.r2) {
      w.branch = "s<=r2";
      w.e_sub = o(2, c.r1);
      w.e_quot = o(s - 2, c.r2);
    } else {
      w.branch = "s>r2";
      w.e_sub = o(s + 2 - c.r2, c.r1);
      w.e_quot = o(c.r2 - 2, c.r2);
    }
  } else if (prop5_first_inequality(c)) {
    w.branch = "first";
    w.e_sub = o(1, c.r1);
    w.e_quot = o(s - 1, r - c.r1);
    w.target_sub = o(1, c.r1);
    w.target_quot = o(0, c.r2) + o(-1, c.r3);
  } else {
    w.branch = "second";
    w.e_sub = o(s - c.r3 + 1, r - c.r3);
    w.e_quot = o(c.r3 - 1, c.r3);
    w.target_sub = o(1, c.r1) + o(0, c.r2);
    w.target_quot = o(-1, c.r3);
  }
  w.config_valid = prop5_config_valid(c);
  w.target_matches = w.target_sub + w.target_quot == prop5_target(c);
  const SlopeBundle e_b = o(s, r);
  try {
    w.extension_ok = extension_exists(e_b, w.e_sub, w.e_quot);
  } catch (const Error&) {
    w.extension_ok = false;
  }
  w.sub_modification_ok = is_minuscule_modification(w.e_sub, w.target_sub);
  w.quot_modification_ok = is_minuscule_modification(w.e_quot, w.target_quot);
  return w;
}

Prop5Witness prop5_witness(const SlopeBundle& e_b, const SlopeBundle& target) {
  if (e_b.empty() || !e_b.is_semistable()) throw PreconditionError("E_b must be isoclinic");
  if (target.rank() != e_b.rank()) throw PreconditionError("target and E_b have different ranks");
  if (target == e_b) throw PreconditionError("target equals E_b: trivial stratum, nothing to construct");
  if (!e_b.degree().fits_slong_p()) throw InvalidArgument("degree too large");
  auto c = classify_prop5_shape(target, e_b.degree().get_si(), false);
  if (!c) throw PreconditionError("target " + target.display() + " has neither shape");
  return prop5_witness(*c);
}

Prop5ScanReport prop5_disjunction_scan(long bound, Exec exec, bool check_witnesses) {
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  Prop5ScanReport report;
  report.bound = bound;
  std::vector<Prop5ScanReport> per_r1(bound);
  auto body = [&](long r1) {
    Prop5ScanReport& part = per_r1[r1 - 1];
    for (long r2 = 1; r2 <= bound; ++r2)
      for (long r3 = 1; r3 <= bound; ++r3) {
        Prop5Config c{Prop5Shape::ThreePart, r1, r2, r3, 0};
        for (long s = 0; s <= c.rank(); ++s) {
          c.s = s;
          if (!prop5_config_valid(c)) {
            ++part.skipped;
            continue;
          }
          ++part.configurations;
          if (!prop5_first_inequality(c) && !prop5_second_inequality(c)) part.counterexamples.push_back(c);
          if (check_witnesses && !prop5_witness(c).valid()) ++part.witness_failures;
        }
      }
  };
  if (exec == Exec::Serial) {
    for (long r1 = 1; r1 <= bound; ++r1) body(r1);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long r1 = 1; r1 <= bound; ++r1) body(r1);
  }
  for (const auto& part : per_r1) {
    report.configurations += part.configurations;
    report.skipped += part.skipped;
    report.witness_failures += part.witness_failures;
    report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(),
                                  part.counterexamples.end());
  }
  return report;
}

}  // namespace kottwitz
