#pragma once

// Independent reference implementations used by the tests to pin expected
// values.  Everything here is deliberately naive: dense vectors, direct
// convolutions, explicit sums, hardcoded Bernoulli numbers.  None of it
// includes the library headers, so a library bug cannot leak into the
// expectations.

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <vector>

namespace oracle {

using Rat = mpq_class;

// ---- truncated power series in one variable u --------------------------

using Poly = std::vector<Rat>;  // p[k] is the u^k coefficient

inline Poly zero(int n) { return Poly(static_cast<size_t>(n), Rat(0)); }

inline Poly one(int n) {
  Poly p = zero(n);
  p[0] = 1;
  return p;
}

inline Poly lin(int sign, int m, int n) {  // 1 + sign u^m
  Poly p = one(n);
  if (m < n) p[static_cast<size_t>(m)] = sign;
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle size mismatch");
  Poly r = a;
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle size mismatch");
  Poly r = a;
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle size mismatch");
  const size_t n = a.size();
  Poly r = zero(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Poly scale(const Poly& a, const Rat& c) {
  Poly r = a;
  for (Rat& x : r) x *= c;
  return r;
}

inline Poly inv(const Poly& a) {
  if (a[0] == 0) throw std::logic_error("oracle inv: constant term vanishes");
  const size_t n = a.size();
  Poly r = zero(static_cast<int>(n));
  r[0] = 1 / a[0];
  for (size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

inline Poly pow(Poly a, int e) {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Poly r = one(static_cast<int>(a.size()));
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

inline Poly exp(const Poly& a) {  // requires a[0] == 0
  if (a[0] != 0) throw std::logic_error("oracle exp: nonzero constant term");
  const int n = static_cast<int>(a.size());
  Poly r = one(n), term = one(n);
  for (int k = 1; k < n; ++k) {
    term = scale(mul(term, a), Rat(1, k));
    r = add(r, term);
  }
  return r;
}

// ---- arithmetic helpers --------------------------------------------------

inline long sigma(int n, int p) {  // sum of d^p over divisors d of n
  long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long t = 1;
    for (int i = 0; i < p; ++i) t *= d;
    s += t;
  }
  return s;
}

inline Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

// ---- theta constants by lattice sums ------------------------------------
// u = q^{1/2}; classical sum forms of the triple products.

inline Poly theta1_sum_reduced(int n) {  // theta_1(0)/q^{1/8} = 2 sum u^{k(k+1)}
  Poly p = zero(n);
  for (int k = 0; k * (k + 1) < n; ++k) p[static_cast<size_t>(k * (k + 1))] += 2;
  return p;
}

inline Poly theta2_sum(int n) {  // 1 + 2 sum (-1)^k u^{k^2}
  Poly p = zero(n);
  p[0] = 1;
  for (int k = 1; k * k < n; ++k) p[static_cast<size_t>(k * k)] += (k % 2 == 0) ? 2 : -2;
  return p;
}

inline Poly theta3_sum(int n) {  // 1 + 2 sum u^{k^2}
  Poly p = zero(n);
  p[0] = 1;
  for (int k = 1; k * k < n; ++k) p[static_cast<size_t>(k * k)] += 2;
  return p;
}

// ---- Q[s]/(s^4) ----------------------------------------------------------

using S4 = std::array<Rat, 4>;

inline S4 s4_zero() { return {Rat(0), Rat(0), Rat(0), Rat(0)}; }

inline S4 s4_mul(const S4& a, const S4& b) {
  S4 r = s4_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline S4 s4_inv(const S4& a) {
  if (a[0] == 0) throw std::logic_error("oracle s4_inv: not a unit");
  S4 r = s4_zero();
  r[0] = 1 / a[0];
  for (int k = 1; k < 4; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// s = X^2 throughout.  sinh(X/2)/(X/2) = sum_k s^k / ((2k+1)! 4^k)
inline S4 s4_sinhc_half() {
  S4 r = s4_zero();
  Rat four(1);
  for (int k = 0; k < 4; ++k) {
    r[k] = 1 / (factorial(2 * k + 1) * four);
    four *= 4;
  }
  return r;
}

inline S4 s4_ahat() { return s4_inv(s4_sinhc_half()); }

inline S4 s4_cosh_half() {  // sum_k s^k / ((2k)! 4^k)
  S4 r = s4_zero();
  Rat four(1);
  for (int k = 0; k < 4; ++k) {
    r[k] = 1 / (factorial(2 * k) * four);
    four *= 4;
  }
  return r;
}

inline S4 s4_cosh_full() {  // sum_k s^k / (2k)!
  S4 r = s4_zero();
  for (int k = 0; k < 4; ++k) r[k] = 1 / factorial(2 * k);
  return r;
}

// X/tanh(X/2) = 2 (X/2) coth(X/2) via x coth x = sum 2^{2k} B_{2k} x^{2k}/(2k)!
// with B_0 = 1, B_2 = 1/6, B_4 = -1/30, B_6 = 1/42.
inline S4 s4_lhat() {
  const std::array<Rat, 4> bern = {Rat(1), Rat(1, 6), Rat(-1, 30), Rat(1, 42)};
  S4 r = s4_zero();
  for (int k = 0; k < 4; ++k) {
    // x = X/2, so 2 * (2x)^{2k} B_{2k}/(2k)! = 2 * X^{2k} B_{2k}/(2k)!
    r[k] = Rat(2) * bern[k] / factorial(2 * k);
  }
  return r;
}

// ---- Q[t]/(t^7): explicit-root specializations --------------------------
// A formal root X = a t for a concrete rational a; s = X^2 = a^2 t^2.

using T7 = std::array<Rat, 7>;

inline T7 t7_zero() { return {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}; }

inline T7 t7_one() {
  T7 r = t7_zero();
  r[0] = 1;
  return r;
}

inline T7 t7_mul(const T7& a, const T7& b) {
  T7 r = t7_zero();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; i + j < 7; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline T7 t7_add(const T7& a, const T7& b) {
  T7 r = a;
  for (int i = 0; i < 7; ++i) r[i] += b[i];
  return r;
}

inline T7 t7_scale(const T7& a, const Rat& c) {
  T7 r = a;
  for (Rat& x : r) x *= c;
  return r;
}

inline T7 t7_from_s4(const S4& f, const Rat& a) {  // substitute s -> a^2 t^2
  T7 r = t7_zero();
  Rat a2 = a * a;
  Rat p(1);
  for (int k = 0; k < 4; ++k) {
    if (2 * k < 7) r[2 * k] = f[k] * p;
    p *= a2;
  }
  return r;
}

inline T7 t7_exp(const Rat& a) {  // e^{a t}
  T7 r = t7_zero();
  Rat p(1);
  for (int k = 0; k < 7; ++k) {
    r[k] = p / factorial(k);
    p *= a;
  }
  return r;
}

// Series in u with T7 coefficients: the bivariate ring Q[t]/(t^7)[[u]].
using TU = std::vector<T7>;

inline TU tu_one(int n) {
  TU r(static_cast<size_t>(n), t7_zero());
  r[0] = t7_one();
  return r;
}

inline TU tu_mul(const TU& a, const TU& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle tu size mismatch");
  const size_t n = a.size();
  TU r(n, t7_zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] = t7_add(r[i + j], t7_mul(a[i], b[j]));
  return r;
}

inline TU tu_inv(const TU& a) {
  if (a[0] != t7_one()) throw std::logic_error("oracle tu_inv wants leading 1");
  const size_t n = a.size();
  TU r(n, t7_zero());
  r[0] = t7_one();
  for (size_t k = 1; k < n; ++k) {
    T7 s = t7_zero();
    for (size_t j = 1; j <= k; ++j) s = t7_add(s, t7_mul(a[j], r[k - j]));
    r[k] = t7_scale(s, Rat(-1));
  }
  return r;
}

// (1 + sign e^{at} u^m)(1 + sign e^{-at} u^m), truncated at u^n
inline TU tu_pair(int sign, const Rat& a, int m, int n) {
  TU r = tu_one(n);
  const T7 ep = t7_exp(a), em = t7_exp(-a);
  if (m < n) r[static_cast<size_t>(m)] = t7_scale(t7_add(ep, em), Rat(sign));
  if (2 * m < n) r[static_cast<size_t>(2 * m)] = t7_one();
  return r;
}

}  // namespace oracle
