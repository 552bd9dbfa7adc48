#pragma once

// Truncated q-expansions.  A QxSeries<C> stores the value
//
//     q^{eighth/8} * sum_{0 <= k < order} c[k] * u^k,      u = q^{1/2},
//
// with coefficients in a commutative ring C and a hard truncation: u-powers
// >= order are discarded by every operation, and a product never claims more
// precision than both operands supply.  The q^{1/8} prefactor exponent is an
// exact integer; combinations that would need fractional u-powers are
// rejected rather than coerced.

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e8check/parallel.hpp"

namespace e8check {

using Rat = mpq_class;

inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Ring hooks used by the series algorithms.  `heavy` marks coefficient rings
// whose products are expensive enough to parallelize across series slots.
template <class C>
struct ring;

template <>
struct ring<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static bool is_unit(const Rat& x) { return sgn(x) != 0; }
  static bool is_nilpotent(const Rat& x) { return sgn(x) == 0; }
  static Rat invert(const Rat& x) {
    if (sgn(x) == 0) throw std::invalid_argument("QxSeries: inverting zero rational");
    return Rat(1) / x;
  }
  static Rat scale(const Rat& x, const Rat& r) { return x * r; }
  static constexpr bool heavy = false;
};

template <class C>
class QxSeries {
 public:
  int eighth = 0;      // exponent e in the exact prefactor q^{e/8}
  int order = 1;       // u-powers >= order are not represented
  std::vector<C> c;    // c.size() == order

  QxSeries() : c(1, ring<C>::zero()) {}
  explicit QxSeries(int ord, int eighth_exp = 0) : eighth(eighth_exp), order(ord) {
    if (ord < 1) throw std::invalid_argument("QxSeries: order must be >= 1");
    c.assign(ord, ring<C>::zero());
  }

  static QxSeries zero(int ord) { return QxSeries(ord); }
  static QxSeries one(int ord) {
    QxSeries s(ord);
    s.c[0] = ring<C>::one();
    return s;
  }
  static QxSeries constant(const C& x, int ord) {
    QxSeries s(ord);
    s.c[0] = x;
    return s;
  }
  // x * u^k
  static QxSeries monomial(const C& x, int k, int ord) {
    QxSeries s(ord);
    if (k < 0) throw std::invalid_argument("QxSeries: negative u-power");
    if (k < ord) s.c[k] = x;
    return s;
  }

  bool is_zero() const {
    for (const C& x : c)
      if (!ring<C>::is_zero(x)) return false;
    return true;
  }

  // Smallest k with c[k] != 0, or `order` for the zero series.
  int valuation() const {
    for (int k = 0; k < order; ++k)
      if (!ring<C>::is_zero(c[k])) return k;
    return order;
  }

  bool operator==(const QxSeries& o) const {
    return eighth == o.eighth && order == o.order && c == o.c;
  }
};

namespace detail {
// Addition needs a common prefactor.  Exponent gaps that are multiples of 4
// are absorbed as u-shifts (q^{4/8} = u); anything else has no representation
// in integer u-powers.
template <class C>
void align_for_add(QxSeries<C>& a, QxSeries<C>& b) {
  if (a.eighth == b.eighth) return;
  int d = a.eighth - b.eighth;
  if (d % 4 != 0)
    throw std::invalid_argument("QxSeries: adding series with incompatible q^{1/8} prefactors");
  QxSeries<C>& hi = d > 0 ? a : b;  // larger prefactor -> shift coefficients up
  const QxSeries<C>& lo = d > 0 ? b : a;
  int k = std::abs(d) / 4;
  QxSeries<C> shifted(hi.order, lo.eighth);
  for (int j = 0; j + k < hi.order; ++j) shifted.c[j + k] = hi.c[j];
  hi = std::move(shifted);
}
}  // namespace detail

template <class C>
QxSeries<C> qs_add(QxSeries<C> a, QxSeries<C> b) {
  detail::align_for_add(a, b);
  int ord = std::min(a.order, b.order);
  QxSeries<C> r(ord, a.eighth);
  for (int k = 0; k < ord; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

template <class C>
QxSeries<C> qs_neg(QxSeries<C> a) {
  for (C& x : a.c) x = -x;
  return a;
}

template <class C>
QxSeries<C> qs_sub(QxSeries<C> a, QxSeries<C> b) {
  return qs_add(std::move(a), qs_neg(std::move(b)));
}

// Reference product: textbook accumulation, kept deliberately simple and
// always serial.  The production path below must agree with it exactly.
template <class C>
QxSeries<C> qs_mul_serial(const QxSeries<C>& a, const QxSeries<C>& b) {
  QxSeries<C> r(std::min(a.order, b.order), a.eighth + b.eighth);
  for (int i = 0; i < a.order && i < r.order; ++i) {
    if (ring<C>::is_zero(a.c[i])) continue;
    for (int j = 0; i + j < r.order && j < b.order; ++j)
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  return r;
}

// Production product: each output slot is an independent convolution, which
// is where the OpenMP fan-out happens for heavy coefficient rings.
template <class C>
QxSeries<C> qs_mul(const QxSeries<C>& a, const QxSeries<C>& b) {
  QxSeries<C> r(std::min(a.order, b.order), a.eighth + b.eighth);
  par::for_each(r.order, ring<C>::heavy, [&](int k) {
    C acc = ring<C>::zero();
    int lo = std::max(0, k - b.order + 1);
    int hi = std::min(k, a.order - 1);
    for (int i = lo; i <= hi; ++i) {
      if (!ring<C>::is_zero(a.c[i]) && !ring<C>::is_zero(b.c[k - i]))
        acc = acc + a.c[i] * b.c[k - i];
    }
    r.c[k] = std::move(acc);
  });
  return r;
}

template <class C>
QxSeries<C> qs_scale(QxSeries<C> a, const Rat& r) {
  for (C& x : a.c) x = ring<C>::scale(x, r);
  return a;
}

template <class C>
QxSeries<C> qs_scale_coeff(QxSeries<C> a, const C& m) {
  for (C& x : a.c) x = x * m;
  return a;
}

template <class C>
QxSeries<C> qs_truncate(QxSeries<C> a, int ord) {
  if (ord < 1 || ord > a.order)
    throw std::invalid_argument("QxSeries: truncation cannot extend precision");
  a.order = ord;
  a.c.resize(ord);
  return a;
}

// Multiply by u^k.  k < 0 demands divisibility and costs precision honestly.
template <class C>
QxSeries<C> qs_shift_u(const QxSeries<C>& a, int k) {
  if (k == 0) return a;
  if (k > 0) {
    QxSeries<C> r(a.order, a.eighth);
    for (int j = 0; j + k < a.order; ++j) r.c[j + k] = a.c[j];
    return r;
  }
  int m = -k;
  for (int j = 0; j < m && j < a.order; ++j)
    if (!ring<C>::is_zero(a.c[j]))
      throw std::invalid_argument("QxSeries: u-shift below a nonzero coefficient");
  if (a.order <= m) throw std::invalid_argument("QxSeries: u-shift exhausts precision");
  QxSeries<C> r(a.order - m, a.eighth);
  for (int j = m; j < a.order; ++j) r.c[j - m] = a.c[j];
  return r;
}

// Normalize the prefactor exponent into {0,1,2,3} by folding multiples of
// q^{1/2} into the coefficients.
template <class C>
QxSeries<C> qs_fold_prefactor(const QxSeries<C>& a) {
  int r = ((a.eighth % 4) + 4) % 4;
  int k = (a.eighth - r) / 4;
  QxSeries<C> s = qs_shift_u(a, k);
  s.eighth = r;
  return s;
}

// u -> -u (the involution fixing q).  Needs the prefactor to be a genuine
// u-power, i.e. eighth divisible by 4.
template <class C>
QxSeries<C> qs_flip_u(QxSeries<C> a) {
  if (a.eighth % 4 != 0)
    throw std::invalid_argument("QxSeries: u -> -u undefined for fractional u prefactor");
  int k = a.eighth / 4;
  for (int j = 0; j < a.order; ++j)
    if ((j + k) % 2 != 0) a.c[j] = -a.c[j];
  return a;
}

template <class C>
QxSeries<C> qs_inv(const QxSeries<C>& a) {
  if (!ring<C>::is_unit(a.c[0]))
    throw std::invalid_argument("QxSeries: leading coefficient is not a unit");
  QxSeries<C> r(a.order, -a.eighth);
  C inv0 = ring<C>::invert(a.c[0]);
  r.c[0] = inv0;
  for (int k = 1; k < a.order; ++k) {
    C acc = ring<C>::zero();
    for (int j = 1; j <= k; ++j) {
      if (!ring<C>::is_zero(a.c[j]) && !ring<C>::is_zero(r.c[k - j]))
        acc = acc + a.c[j] * r.c[k - j];
    }
    r.c[k] = -(inv0 * acc);
  }
  return r;
}

template <class C>
QxSeries<C> qs_pow(const QxSeries<C>& a, int n) {
  if (n < 0) return qs_pow(qs_inv(a), -n);
  QxSeries<C> r = QxSeries<C>::one(a.order);
  QxSeries<C> base = a;
  while (n > 0) {
    if (n & 1) r = qs_mul(r, base);
    n >>= 1;
    if (n > 0) base = qs_mul(base, base);
  }
  return r;
}

// exp of a series whose u^0 coefficient is nilpotent (no prefactor allowed).
// Splits off the nilpotent constant term, exponentiates it by its finite
// series, and handles the rest via the valuation >= 1 tail.
template <class C>
QxSeries<C> qs_exp(const QxSeries<C>& a) {
  if (a.eighth != 0) throw std::invalid_argument("QxSeries: exp of series with prefactor");
  if (!ring<C>::is_nilpotent(a.c[0]))
    throw std::invalid_argument("QxSeries: exp needs a nilpotent u^0 coefficient");

  C head = ring<C>::one();
  {
    C term = ring<C>::one();
    for (int k = 1; !ring<C>::is_zero(term); ++k) {
      if (k > 64) throw std::logic_error("QxSeries: exp head failed to terminate");
      term = ring<C>::scale(term * a.c[0], Rat(1, k));
      head = head + term;
    }
  }

  QxSeries<C> tail = a;
  tail.c[0] = ring<C>::zero();
  QxSeries<C> r = QxSeries<C>::one(a.order);
  QxSeries<C> term = QxSeries<C>::one(a.order);
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > a.order + 64) throw std::logic_error("QxSeries: exp tail failed to terminate");
    term = qs_scale(qs_mul(term, tail), Rat(1, k));
    r = qs_add(r, term);
  }
  return qs_scale_coeff(std::move(r), head);
}

// log of 1 + r where r has nilpotent u^0 coefficient (or none at all).
template <class C>
QxSeries<C> qs_log(const QxSeries<C>& a) {
  if (a.eighth != 0) throw std::invalid_argument("QxSeries: log of series with prefactor");
  QxSeries<C> r = a;
  r.c[0] = r.c[0] - ring<C>::one();
  if (!ring<C>::is_nilpotent(r.c[0]))
    throw std::invalid_argument("QxSeries: log needs argument 1 + (nilpotent + positive order)");
  QxSeries<C> acc(a.order);
  QxSeries<C> pw = r;
  for (int k = 1; !pw.is_zero(); ++k) {
    if (k > a.order + 64) throw std::logic_error("QxSeries: log failed to terminate");
    acc = qs_add(acc, qs_scale(pw, Rat((k % 2 == 1) ? 1 : -1, k)));
    pw = qs_mul(pw, r);
  }
  return acc;
}

// Coefficientwise map, e.g. embedding scalar series into a larger ring.
template <class D, class C, class F>
QxSeries<D> qs_map(const QxSeries<C>& a, F&& f) {
  QxSeries<D> r(a.order, a.eighth);
  for (int k = 0; k < a.order; ++k) r.c[k] = f(a.c[k]);
  return r;
}

// Equality of values through u^{n-1}, tolerant of order/prefactor bookkeeping.
template <class C>
bool qs_agree_through(const QxSeries<C>& a, const QxSeries<C>& b, int n) {
  QxSeries<C> fa = qs_fold_prefactor(a);
  QxSeries<C> fb = qs_fold_prefactor(b);
  if (fa.eighth != fb.eighth) return fa.is_zero() && fb.is_zero();
  if (n > fa.order || n > fb.order)
    throw std::invalid_argument("QxSeries: comparison beyond computed precision");
  for (int k = 0; k < n; ++k)
    if (!(fa.c[k] == fb.c[k])) return false;
  return true;
}

template <class C>
QxSeries<C> operator+(const QxSeries<C>& a, const QxSeries<C>& b) {
  return qs_add(a, b);
}
template <class C>
QxSeries<C> operator-(const QxSeries<C>& a, const QxSeries<C>& b) {
  return qs_sub(a, b);
}
template <class C>
QxSeries<C> operator*(const QxSeries<C>& a, const QxSeries<C>& b) {
  return qs_mul(a, b);
}
template <class C>
QxSeries<C> operator-(const QxSeries<C>& a) {
  return qs_neg(a);
}

using ScalarSeries = QxSeries<Rat>;

std::string scalar_series_str(const ScalarSeries& s);

}  // namespace e8check
