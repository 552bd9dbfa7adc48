#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "e8check/graded.hpp"
#include "e8check/parallel.hpp"
#include "e8check/qseries.hpp"
#include "e8check/theta.hpp"

using namespace e8check;

namespace {

struct ParallelGuard {
  bool saved = par::enabled();
  ~ParallelGuard() { par::set_enabled(saved); }
};

GradedSeries heavy_series() {
  // a symmetrized theta kernel is the kind of operand the engine multiplies
  // all day; order 14 keeps the test quick
  return symmetrize_prod(theta_ratio(ThetaKind::TH1, 14), RootGroup::Tangent);
}

}  // namespace

TEST_CASE("runtime knobs") {
  CHECK(par::threads() >= 1);
  ParallelGuard guard;
  par::set_enabled(false);
  CHECK(!par::enabled());
  par::set_enabled(true);
  CHECK(par::enabled());
}

TEST_CASE("for_each covers each index exactly once") {
  ParallelGuard guard;
  for (bool on : {false, true}) {
    par::set_enabled(on);
    std::vector<int> hits(257, 0);
    par::for_each(257, true, [&](int i) { hits[static_cast<size_t>(i)] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("parallel and serial products agree on scalar series") {
  ScalarSeries a = eisenstein(4, 32);
  ScalarSeries b = phi_power(-8, 32);
  ScalarSeries serial = qs_mul_serial(a, b);
  ParallelGuard guard;
  par::set_enabled(true);
  CHECK(qs_mul(a, b) == serial);
  par::set_enabled(false);
  CHECK(qs_mul(a, b) == serial);
}

TEST_CASE("parallel and serial products agree on graded series") {
  GradedSeries g = heavy_series();
  GradedSeries serial = qs_mul_serial(g, g);
  ParallelGuard guard;
  par::set_enabled(true);
  CHECK(qs_mul(g, g) == serial);
  par::set_enabled(false);
  CHECK(qs_mul(g, g) == serial);
}

TEST_CASE("symmetrization is oblivious to the parallel switch") {
  ParallelGuard guard;
  par::set_enabled(true);
  GradedSeries on = heavy_series();
  par::set_enabled(false);
  GradedSeries off = heavy_series();
  CHECK(on == off);
}
