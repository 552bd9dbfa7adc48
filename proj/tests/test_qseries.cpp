#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "e8check/qseries.hpp"
#include "oracles.hpp"

using e8check::Rat;
using e8check::ScalarSeries;
using e8check::qs_agree_through;
using e8check::qs_exp;
using e8check::qs_flip_u;
using e8check::qs_fold_prefactor;
using e8check::qs_inv;
using e8check::qs_log;
using e8check::qs_mul;
using e8check::qs_mul_serial;
using e8check::qs_pow;
using e8check::qs_scale;
using e8check::qs_shift_u;
using e8check::qs_truncate;

namespace {

// small deterministic rational generator
struct RatGen {
  uint32_t state = 12345;
  uint32_t next() { return state = state * 1103515245u + 12345u; }
  Rat rat() {
    int num = static_cast<int>(next() % 19) - 9;
    int den = 1 + static_cast<int>(next() % 7);
    Rat r(num, den);
    r.canonicalize();  // two-argument mpq_class construction does not reduce
    return r;
  }
};

ScalarSeries from_oracle(const oracle::Poly& p, int eighth = 0) {
  ScalarSeries s(static_cast<int>(p.size()), eighth);
  for (size_t k = 0; k < p.size(); ++k) s.c[k] = p[k];
  return s;
}

oracle::Poly to_oracle(const ScalarSeries& s) {
  oracle::Poly p(static_cast<size_t>(s.order));
  for (int k = 0; k < s.order; ++k) p[static_cast<size_t>(k)] = s.c[k];
  return p;
}

oracle::Poly random_poly(RatGen& g, int n, bool unit_lead) {
  oracle::Poly p = oracle::zero(n);
  for (auto& x : p) x = g.rat();
  if (unit_lead && p[0] == 0) p[0] = 1;
  if (!unit_lead) p[0] = 0;
  return p;
}

}  // namespace

TEST_CASE("construction and equality") {
  ScalarSeries a = ScalarSeries::one(8);
  CHECK(a.order == 8);
  CHECK(a.eighth == 0);
  CHECK(a.c[0] == 1);
  CHECK(!a.is_zero());
  CHECK(ScalarSeries::zero(8).is_zero());
  ScalarSeries m = ScalarSeries::monomial(Rat(3), 5, 8);
  CHECK(m.c[5] == 3);
  CHECK(m.valuation() == 5);
  CHECK(a == ScalarSeries::constant(Rat(1), 8));
}

TEST_CASE("multiplication matches the reference oracle") {
  RatGen g;
  for (int trial = 0; trial < 8; ++trial) {
    oracle::Poly pa = random_poly(g, 20, true);
    oracle::Poly pb = random_poly(g, 20, true);
    ScalarSeries prod = qs_mul(from_oracle(pa), from_oracle(pb));
    CHECK(to_oracle(prod) == oracle::mul(pa, pb));
    CHECK(prod == qs_mul_serial(from_oracle(pa), from_oracle(pb)));
  }
}

TEST_CASE("geometric series inverse") {
  // 1/(1-u) = 1 + u + u^2 + ...
  ScalarSeries inv = qs_inv(from_oracle(oracle::lin(-1, 1, 12)));
  for (int k = 0; k < 12; ++k) CHECK(inv.c[k] == 1);
}

TEST_CASE("inverse and power match the oracle") {
  RatGen g;
  for (int trial = 0; trial < 6; ++trial) {
    oracle::Poly pa = random_poly(g, 16, true);
    CHECK(to_oracle(qs_inv(from_oracle(pa))) == oracle::inv(pa));
    CHECK(to_oracle(qs_pow(from_oracle(pa), 5)) == oracle::pow(pa, 5));
    CHECK(to_oracle(qs_pow(from_oracle(pa), -3)) == oracle::pow(pa, -3));
  }
  // (1+u)^{-3} has coefficients (-1)^k binom(k+2, 2)
  ScalarSeries b = qs_pow(from_oracle(oracle::lin(1, 1, 10)), -3);
  for (int k = 0; k < 10; ++k) {
    Rat expect((k % 2 == 0 ? 1 : -1) * (k + 1) * (k + 2) / 2);
    CHECK(b.c[k] == expect);
  }
}

TEST_CASE("exp and log") {
  RatGen g;
  for (int trial = 0; trial < 6; ++trial) {
    oracle::Poly pa = random_poly(g, 14, false);  // zero constant term
    CHECK(to_oracle(qs_exp(from_oracle(pa))) == oracle::exp(pa));
    // log(exp(a)) == a
    CHECK(qs_log(qs_exp(from_oracle(pa))) == from_oracle(pa));
    // exp(log(1 + a)) == 1 + a
    oracle::Poly pu = pa;
    pu[0] = 1;
    CHECK(qs_exp(qs_log(from_oracle(pu))) == from_oracle(pu));
  }
  CHECK_THROWS_AS(qs_exp(ScalarSeries::one(8)), std::invalid_argument);
}

TEST_CASE("exp turns sums into products") {
  RatGen g;
  oracle::Poly pa = random_poly(g, 12, false);
  oracle::Poly pb = random_poly(g, 12, false);
  ScalarSeries lhs = qs_exp(from_oracle(oracle::add(pa, pb)));
  ScalarSeries rhs = qs_mul(qs_exp(from_oracle(pa)), qs_exp(from_oracle(pb)));
  CHECK(lhs == rhs);
}

TEST_CASE("prefactor alignment under addition") {
  // q^{9/8} x = q^{1/8} u^2 x, so eighth 9 aligns with eighth 1 by a shift
  ScalarSeries a = ScalarSeries::one(8);
  a.eighth = 9;
  ScalarSeries b = ScalarSeries::one(8);
  b.eighth = 1;
  ScalarSeries s = a + b;
  CHECK(s.eighth == 1);
  CHECK(s.c[0] == 1);
  CHECK(s.c[2] == 1);
  // the shifted operand loses two slots of precision
  CHECK(s.order == 8);

  ScalarSeries c = ScalarSeries::one(8);
  c.eighth = 3;
  CHECK_THROWS_AS(b + c, std::invalid_argument);
}

TEST_CASE("prefactor folding") {
  ScalarSeries a = ScalarSeries::one(8);
  a.eighth = 8;  // q^1 = u^2
  ScalarSeries f = qs_fold_prefactor(a);
  CHECK(f.eighth == 0);
  CHECK(f.c[0] == 0);
  CHECK(f.c[2] == 1);

  a.eighth = 13;  // q^{13/8} = q^{1/8} u^3
  f = qs_fold_prefactor(a);
  CHECK(f.eighth == 1);
  CHECK(f.c[3] == 1);
}

TEST_CASE("u flip") {
  RatGen g;
  oracle::Poly pa = random_poly(g, 16, true);
  ScalarSeries a = from_oracle(pa);
  ScalarSeries fl = qs_flip_u(a);
  for (int k = 0; k < 16; ++k) CHECK(fl.c[k] == (k % 2 == 0 ? a.c[k] : -a.c[k]));
  CHECK(qs_flip_u(fl) == a);
  // products respect the flip
  oracle::Poly pb = random_poly(g, 16, true);
  ScalarSeries b = from_oracle(pb);
  CHECK(qs_flip_u(qs_mul(a, b)) == qs_mul(qs_flip_u(a), qs_flip_u(b)));
  // a prefactor q^{4/8} = u contributes its own sign flip
  ScalarSeries m = ScalarSeries::one(8);
  m.eighth = 4;
  CHECK(qs_flip_u(m).c[0] == -1);
}

TEST_CASE("shift and truncate") {
  ScalarSeries a = ScalarSeries::monomial(Rat(5), 3, 10);
  ScalarSeries up = qs_shift_u(a, 2);
  CHECK(up.c[5] == 5);
  CHECK(up.order == 10);
  ScalarSeries down = qs_shift_u(up, -2);
  CHECK(down.c[3] == 5);
  CHECK(down.order == 8);  // honest precision loss
  CHECK_THROWS_AS(qs_shift_u(a, -4), std::invalid_argument);

  ScalarSeries t = qs_truncate(a, 3);
  CHECK(t.order == 3);
  CHECK(t.is_zero());
  CHECK_THROWS_AS(qs_truncate(t, 5), std::invalid_argument);
}

TEST_CASE("agreement comparisons respect precision") {
  ScalarSeries a = ScalarSeries::one(8);
  ScalarSeries b = ScalarSeries::one(8);
  b.c[6] = 7;
  CHECK(qs_agree_through(a, b, 6));
  CHECK(!qs_agree_through(a, b, 7));
  CHECK_THROWS_AS(qs_agree_through(a, b, 9), std::invalid_argument);
}
