// Serial vs OpenMP timings for the parallel kernels; also checks that both agree.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kottwitz/enumeration.hpp"
#include "kottwitz/prop5.hpp"
#include "kottwitz/root_datum.hpp"

using namespace kottwitz;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool bench_enumeration(const std::string& label, const BasedRootDatum& d, const Coweight& mu) {
  std::vector<SigmaClass> serial, parallel;
  double ts = seconds([&] { serial = enumerate_B_G_mu(d, mu, {std::nullopt, Exec::Serial}); });
  double tp = seconds([&] { parallel = enumerate_B_G_mu(d, mu, {std::nullopt, Exec::Parallel}); });
  bool same = serial == parallel;
  std::printf("%-28s %6zu classes  serial %8.3fs  parallel %8.3fs  %s\n", label.c_str(), serial.size(), ts, tp,
              same ? "agree" : "DISAGREE");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  long bound = argc > 1 ? std::stol(argv[1]) : 30;
  bool ok = true;
  ok &= bench_enumeration("B(GL_8, (1^4,0^4))", build_datum(Family::GL, 8), cw_from(IntVector{1, 1, 1, 1, 0, 0, 0, 0}));
  ok &= bench_enumeration("B(GL_8, (3,2,2,1,1,0,0,0))", build_datum(Family::GL, 8),
                          cw_from(IntVector{3, 2, 2, 1, 1, 0, 0, 0}));
  ok &= bench_enumeration("B(E_6, 2 omega_1)", build_datum(Family::E, 6), cw_from(IntVector{2, 0, 0, 0, 0, 0}));
  ok &= bench_enumeration("B(E_7, omega_7)", build_datum(Family::E, 7), cw_from(IntVector{0, 0, 0, 0, 0, 0, 1}));
  ok &= bench_enumeration("B(2E_6, omega_2)", build_datum(Family::E, 6, 2), cw_from(IntVector{0, 1, 0, 0, 0, 0}));

  Prop5ScanReport s, p;
  double ts = seconds([&] { s = prop5_disjunction_scan(bound, Exec::Serial, false); });
  double tp = seconds([&] { p = prop5_disjunction_scan(bound, Exec::Parallel, false); });
  bool same = s.configurations == p.configurations && s.skipped == p.skipped &&
              s.counterexamples.size() == p.counterexamples.size();
  std::printf("%-28s %6ld configs   serial %8.3fs  parallel %8.3fs  %s\n", ("prop5 scan, bound " + std::to_string(bound)).c_str(),
              static_cast<long>(s.configurations), ts, tp, same ? "agree" : "DISAGREE");
  ok &= same;
  return ok ? 0 : 1;
}
