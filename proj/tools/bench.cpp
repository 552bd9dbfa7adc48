// Timing comparison between the serial reference kernels and the
// OpenMP-parallel ones on representative workloads.

#include <chrono>
#include <cstdio>
#include <functional>

#include "e8check/graded.hpp"
#include "e8check/parallel.hpp"
#include "e8check/qseries.hpp"
#include "e8check/theta.hpp"

using namespace e8check;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, int reps, const std::function<void()>& serial,
         const std::function<void()>& parallel) {
  par::set_enabled(false);
  const double s = time_ms(serial, reps);
  par::set_enabled(true);
  const double p = time_ms(parallel, reps);
  std::printf("%-34s %10.2f %10.2f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads available: %d (OpenMP %s)\n\n", par::threads(),
              par::compiled_with_openmp() ? "on" : "off");
  std::printf("%-34s %10s %10s %9s\n", "workload", "serial ms", "omp ms", "speedup");

  const int ord = 20;
  const GradedSeries a = symmetrize_prod(theta_ratio(ThetaKind::TH1, ord), RootGroup::Tangent);
  const GradedSeries b = symmetrize_prod(theta_ratio(ThetaKind::TH2, ord), RootGroup::E8_1);

  row("graded series product", 3,
      [&] { (void)qs_mul_serial(a, b); },
      [&] { (void)qs_mul(a, b); });

  row("symmetrized theta kernel", 3,
      [&] { (void)symmetrize_prod(theta_ratio(ThetaKind::TH, ord), RootGroup::E8_2); },
      [&] { (void)symmetrize_prod(theta_ratio(ThetaKind::TH, ord), RootGroup::E8_2); });

  row("graded series inverse", 3,
      [&] { (void)qs_inv(a); },
      [&] { (void)qs_inv(a); });

  par::set_enabled(true);
  return 0;
}
