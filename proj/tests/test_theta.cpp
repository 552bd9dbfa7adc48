#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "e8check/theta.hpp"
#include "oracles.hpp"

using namespace e8check;

namespace {

ScalarSeries from_oracle(const oracle::Poly& p, int eighth = 0) {
  ScalarSeries s(static_cast<int>(p.size()), eighth);
  for (size_t k = 0; k < p.size(); ++k) s.c[k] = p[k];
  return s;
}

SPoly from_s4(const oracle::S4& f) { return SPoly{{f[0], f[1], f[2], f[3]}}; }

// evaluate a scalar series numerically at u = e^{i pi tau}
Cx eval_series(const ScalarSeries& s, Cx tau) {
  const Cx u = std::exp(Cx(0.0, 1.0) * M_PI * tau);
  Cx sum = 0.0;
  Cx uk = 1.0;
  for (int k = 0; k < s.order; ++k) {
    sum += s.c[k].get_d() * uk;
    uk *= u;
  }
  // prefactor q^{eighth/8} = u^{eighth/4}
  return sum * std::pow(u, s.eighth / 4.0);
}

}  // namespace

TEST_CASE("kernel q^0 slices are the analytic kernels") {
  const int ord = 8;
  CHECK(theta_ratio(ThetaKind::TH, ord).c[0] == spoly_ahat_kernel());
  CHECK(theta_ratio(ThetaKind::TH1, ord).c[0] == spoly_cosh_half());
  CHECK(theta_ratio(ThetaKind::TH2, ord).c[0] == ring<SPoly>::one());
  CHECK(theta_ratio(ThetaKind::TH3, ord).c[0] == ring<SPoly>::one());
  // all four are normalized: setting s = 0 gives the constant series 1
  for (ThetaKind k : {ThetaKind::TH, ThetaKind::TH1, ThetaKind::TH2, ThetaKind::TH3}) {
    EvenRootSeries f = theta_ratio(k, ord);
    for (int j = 0; j < ord; ++j) CHECK(f.c[j].a[0] == (j == 0 ? 1 : 0));
  }
}

TEST_CASE("half-integer kernels expand as expected") {
  // TH2 = prod (1 - e^X q^{n-1/2})(1 - e^-X q^{n-1/2})/(1 - q^{n-1/2})^2:
  // the u^1 slot is 2 - 2cosh X
  EvenRootSeries f = theta_ratio(ThetaKind::TH2, 6);
  SPoly want = ring<SPoly>::scale(spoly_cosh_full(), Rat(-2)) + SPoly::constant(Rat(2));
  CHECK(f.c[1] == want);
  // TH3 is TH2 with u -> -u
  EvenRootSeries g = theta_ratio(ThetaKind::TH3, 6);
  for (int k = 0; k < 6; ++k) CHECK(g.c[k] == (k % 2 == 0 ? f.c[k] : -f.c[k]));
}

TEST_CASE("theta kernels at an explicit root") {
  // substitute a concrete root X = a t and compare against a direct
  // bivariate product in Q[t]/(t^7)[[u]]
  const int ord = 10;
  const Rat a(3, 2);

  struct Case {
    ThetaKind kind;
    int sign;     // pair sign
    int start;    // first u exponent
    int step;     // u exponent step
    oracle::S4 head;
  };
  const Case cases[] = {
      {ThetaKind::TH, -1, 2, 2, oracle::s4_ahat()},
      {ThetaKind::TH1, +1, 2, 2, oracle::s4_cosh_half()},
      {ThetaKind::TH2, -1, 1, 2, {Rat(1), Rat(0), Rat(0), Rat(0)}},
      {ThetaKind::TH3, +1, 1, 2, {Rat(1), Rat(0), Rat(0), Rat(0)}},
  };
  for (const Case& cs : cases) {
    CAPTURE(theta_kind_name(cs.kind));
    oracle::TU want = oracle::tu_one(ord);
    for (int m = cs.start; m < ord; m += cs.step) {
      oracle::TU pair = oracle::tu_pair(cs.sign, a, m, ord);
      oracle::Poly scalar = oracle::pow(oracle::lin(cs.sign, m, ord), 2);
      if (cs.kind == ThetaKind::TH) {
        // the S-type factor has the roots downstairs and the scalars upstairs
        pair = oracle::tu_inv(pair);
      } else {
        scalar = oracle::inv(scalar);
      }
      oracle::TU sc(static_cast<size_t>(ord), oracle::t7_zero());
      for (int k = 0; k < ord; ++k) sc[static_cast<size_t>(k)][0] = scalar[static_cast<size_t>(k)];
      want = oracle::tu_mul(want, oracle::tu_mul(pair, sc));
    }
    // apply the analytic head factor
    oracle::TU head(static_cast<size_t>(ord), oracle::t7_zero());
    head[0] = oracle::t7_from_s4(cs.head, a);
    want = oracle::tu_mul(want, head);

    EvenRootSeries got = theta_ratio(cs.kind, ord);
    for (int k = 0; k < ord; ++k) {
      oracle::T7 slot =
          oracle::t7_from_s4({got.c[k].a[0], got.c[k].a[1], got.c[k].a[2], got.c[k].a[3]}, a);
      CHECK(slot == want[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("theta constants match their lattice sums") {
  const int ord = 26;
  // theta_1(0)/(2 q^{1/8}) as a product vs 2 sum u^{k(k+1)} (sum includes the 2)
  ScalarSeries t1 = theta_const(ThetaKind::TH1, ord);
  CHECK(t1.eighth == 1);
  CHECK(t1 == from_oracle(oracle::theta1_sum_reduced(ord), 1));

  ScalarSeries t2 = theta_const(ThetaKind::TH2, ord);
  CHECK(t2.eighth == 0);
  CHECK(t2 == from_oracle(oracle::theta2_sum(ord)));

  ScalarSeries t3 = theta_const(ThetaKind::TH3, ord);
  CHECK(t3 == from_oracle(oracle::theta3_sum(ord)));

  // u -> -u swaps the two half-integer constants
  CHECK(qs_flip_u(t2) == t3);

  CHECK_THROWS_AS(theta_const(ThetaKind::TH, ord), std::invalid_argument);
}

TEST_CASE("eighth powers fold their prefactors") {
  const int ord = 20;
  ScalarSeries p1 = theta_const8(ThetaKind::TH1, ord);
  CHECK(p1.eighth == 0);
  // 256 q prod (1-q^n)^8 (1+q^n)^16, so the series starts at u^2
  CHECK(p1.c[0] == 0);
  CHECK(p1.c[1] == 0);
  CHECK(p1.c[2] == 256);
  CHECK(p1 == qs_fold_prefactor(from_oracle(oracle::pow(oracle::theta1_sum_reduced(ord), 8), 8)));

  ScalarSeries p2 = theta_const8(ThetaKind::TH2, ord);
  CHECK(p2.c[0] == 1);
  CHECK(p2.c[1] == -16);
  CHECK(p2.c[2] == 112);
  CHECK(p2 == from_oracle(oracle::pow(oracle::theta2_sum(ord), 8)));

  CHECK(qs_flip_u(p2) == theta_const8(ThetaKind::TH3, ord));
}

TEST_CASE("jacobi product identity") {
  CHECK(jacobi_identity_residual(24).is_zero());
  // derivative form: theta'(0)/2pi = (1/2) theta_1 theta_2 theta_3 (0)
  const int ord = 20;
  ScalarSeries lhs = qs_scale(theta_prime_const_over_2pi(ord), Rat(2));
  ScalarSeries rhs = qs_mul(theta_const(ThetaKind::TH1, ord),
                            qs_mul(theta_const(ThetaKind::TH2, ord),
                                   theta_const(ThetaKind::TH3, ord)));
  CHECK(lhs == rhs);
}

TEST_CASE("quartic relation between the constants") {
  const int ord = 20;
  ScalarSeries a = qs_fold_prefactor(qs_pow(theta_const(ThetaKind::TH1, ord), 4));
  ScalarSeries b = qs_pow(theta_const(ThetaKind::TH2, ord), 4);
  ScalarSeries c = qs_pow(theta_const(ThetaKind::TH3, ord), 4);
  CHECK(qs_add(a, b) == c);
}

TEST_CASE("eisenstein series") {
  const int ord = 18;
  ScalarSeries e2 = eisenstein(2, ord);
  ScalarSeries e4 = eisenstein(4, ord);
  ScalarSeries e6 = eisenstein(6, ord);
  // divisor sums, on the nose
  for (int n = 1; 2 * n < ord; ++n) {
    CHECK(e2.c[2 * n] == Rat(-24) * Rat(oracle::sigma(n, 1)));
    CHECK(e4.c[2 * n] == Rat(240) * Rat(oracle::sigma(n, 3)));
    CHECK(e6.c[2 * n] == Rat(-504) * Rat(oracle::sigma(n, 5)));
    CHECK(e2.c[2 * n - 1] == 0);
  }
  CHECK_THROWS_AS(eisenstein(8, ord), std::invalid_argument);

  // E4 as the half-sum of the eighth powers (lattice route)
  ScalarSeries half = qs_scale(qs_add(theta_const8(ThetaKind::TH1, ord),
                                      qs_add(theta_const8(ThetaKind::TH2, ord),
                                             theta_const8(ThetaKind::TH3, ord))),
                               Rat(1, 2));
  CHECK(half == e4);

  // E4^3 - E6^2 = 1728 q prod (1-q^n)^24
  ScalarSeries disc = qs_sub(qs_pow(e4, 3), qs_pow(e6, 2));
  ScalarSeries delta = qs_shift_u(qs_scale(phi_power(24, ord), Rat(1728)), 2);
  CHECK(disc == delta);

  // u d/du log(q prod (1-q^n)^24) = 2 E2
  ScalarSeries d = qs_shift_u(phi_power(24, ord), 2);
  ScalarSeries du(ord, 0);
  for (int k = 0; k < ord; ++k) du.c[k] = d.c[k] * k;
  CHECK(du == qs_scale(qs_mul(e2, d), Rat(2)));
}

TEST_CASE("phi powers invert cleanly") {
  const int ord = 12;
  ScalarSeries p8 = phi_power(8, ord);
  CHECK(p8.c[0] == 1);
  CHECK(p8.c[2] == -8);
  CHECK(p8.c[4] == 20);
  CHECK(p8.c[6] == 0);
  CHECK(p8.c[8] == -70);
  ScalarSeries m8 = phi_power(-8, ord);
  CHECK(m8.c[2] == 8);
  CHECK(m8.c[4] == 44);
  CHECK(m8.c[6] == 192);
  CHECK(qs_mul(p8, m8) == ScalarSeries::one(ord));
}

TEST_CASE("numeric products agree with the exact expansions") {
  const Cx tau(0.13, 1.9);
  const int ord = 40;
  // constants: series in u vs the infinite product at v = 0
  for (ThetaKind k : {ThetaKind::TH1, ThetaKind::TH2, ThetaKind::TH3}) {
    CAPTURE(theta_kind_name(k));
    Cx series = eval_series(theta_const(k, ord), tau);
    Cx value = theta_value(k, 0.0, tau, 60);
    CHECK(std::abs(series - value) < 1e-12);
  }
  // theta'(0, tau) = 2 pi q^{1/8} prod (1-q^n)^3
  Cx dser = 2.0 * M_PI * eval_series(theta_prime_const_over_2pi(ord), tau);
  Cx dval = theta_dv(ThetaKind::TH, 0.0, tau, 60);
  CHECK(std::abs(dser - dval) < 1e-11);
  // E2
  Cx e2ser = eval_series(eisenstein(2, ord), tau);
  CHECK(std::abs(e2ser - e2_value(tau)) < 1e-12);
}

TEST_CASE("transformation laws hold numerically") {
  const auto& samples = default_samples();
  REQUIRE(samples.size() == 5);
  const auto& laws = transform_laws();
  REQUIRE(laws.size() == 11);
  for (const auto& law : laws) {
    CAPTURE(law.id);
    const double tol = (law.id == "2.26") ? 1e-8 : 1e-9;
    CHECK(transform_residual(law.id, samples, 48) < tol);
  }
  CHECK_THROWS_AS(transform_residual("9.99", samples, 8), std::invalid_argument);
}

TEST_CASE("analytic oracle cross-check of the kernels used by theta") {
  CHECK(spoly_ahat_kernel() == from_s4(oracle::s4_ahat()));
  CHECK(spoly_cosh_full() == from_s4(oracle::s4_cosh_full()));
}
