#include "e8check/theta.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace e8check {

const char* theta_kind_name(ThetaKind k) {
  switch (k) {
    case ThetaKind::TH: return "TH";
    case ThetaKind::TH1: return "TH1";
    case ThetaKind::TH2: return "TH2";
    case ThetaKind::TH3: return "TH3";
  }
  return "?";
}

namespace {

// (1 + sign e^X u^m)(1 + sign e^-X u^m) = 1 + sign 2cosh(X) u^m + u^{2m}
EvenRootSeries pair_quad(int sign, int m, int order) {
  EvenRootSeries f = EvenRootSeries::one(order);
  if (m < order) f.c[m] = ring<SPoly>::scale(spoly_cosh_full(), Rat(2 * sign));
  if (2 * m < order) f.c[2 * m] = ring<SPoly>::one();
  return f;
}

// (1 + sign u^m) as a scalar factor
ScalarSeries scalar_lin(int sign, int m, int order) {
  ScalarSeries f = ScalarSeries::one(order);
  if (m < order) f.c[m] = Rat(sign);
  return f;
}

EvenRootSeries promote_spoly(const ScalarSeries& s) {
  return qs_map<SPoly>(s, [](const Rat& r) { return SPoly::constant(r); });
}

}  // namespace

EvenRootSeries qexp_sym_tower(int order) {
  EvenRootSeries den = EvenRootSeries::one(order);
  ScalarSeries num = ScalarSeries::one(order);
  for (int m = 2; m < order; m += 2) {
    den = qs_mul(den, pair_quad(-1, m, order));
    ScalarSeries l = scalar_lin(-1, m, order);
    num = qs_mul(num, qs_mul(l, l));
  }
  return qs_mul(promote_spoly(num), qs_inv(den));
}

EvenRootSeries qexp_wedge_tower(int order) {
  EvenRootSeries num = EvenRootSeries::one(order);
  ScalarSeries den = ScalarSeries::one(order);
  for (int m = 2; m < order; m += 2) {
    num = qs_mul(num, pair_quad(+1, m, order));
    ScalarSeries l = scalar_lin(+1, m, order);
    den = qs_mul(den, qs_mul(l, l));
  }
  return qs_mul(num, promote_spoly(qs_inv(den)));
}

EvenRootSeries qexp_wedge_tower_half(int sign, int order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  EvenRootSeries num = EvenRootSeries::one(order);
  ScalarSeries den = ScalarSeries::one(order);
  for (int m = 1; m < order; m += 2) {
    num = qs_mul(num, pair_quad(sign, m, order));
    ScalarSeries l = scalar_lin(sign, m, order);
    den = qs_mul(den, qs_mul(l, l));
  }
  return qs_mul(num, promote_spoly(qs_inv(den)));
}

EvenRootSeries theta_ratio(ThetaKind k, int order) {
  switch (k) {
    case ThetaKind::TH:
      return qs_scale_coeff(qexp_sym_tower(order), spoly_ahat_kernel());
    case ThetaKind::TH1:
      return qs_scale_coeff(qexp_wedge_tower(order), spoly_cosh_half());
    case ThetaKind::TH2:
      return qexp_wedge_tower_half(-1, order);
    case ThetaKind::TH3:
      return qexp_wedge_tower_half(+1, order);
  }
  throw std::invalid_argument("bad theta kind");
}

ScalarSeries theta_const(ThetaKind k, int order) {
  ScalarSeries p = ScalarSeries::one(order);
  switch (k) {
    case ThetaKind::TH:
      throw std::invalid_argument("theta vanishes at the origin; use theta_prime_const_over_2pi");
    case ThetaKind::TH1:
      // 2 q^{1/8} prod (1-q^n)(1+q^n)^2
      for (int m = 2; m < order; m += 2) {
        ScalarSeries l = scalar_lin(+1, m, order);
        p = qs_mul(p, qs_mul(scalar_lin(-1, m, order), qs_mul(l, l)));
      }
      p = qs_scale(std::move(p), Rat(2));
      p.eighth = 1;
      return p;
    case ThetaKind::TH2:
      // prod (1-q^n)(1-q^{n-1/2})^2
      for (int m = 1; m < order; ++m) {
        if (m % 2 == 0) {
          p = qs_mul(p, scalar_lin(-1, m, order));
        } else {
          ScalarSeries l = scalar_lin(-1, m, order);
          p = qs_mul(p, qs_mul(l, l));
        }
      }
      return p;
    case ThetaKind::TH3:
      // prod (1-q^n)(1+q^{n-1/2})^2
      for (int m = 1; m < order; ++m) {
        if (m % 2 == 0) {
          p = qs_mul(p, scalar_lin(-1, m, order));
        } else {
          ScalarSeries l = scalar_lin(+1, m, order);
          p = qs_mul(p, qs_mul(l, l));
        }
      }
      return p;
  }
  throw std::invalid_argument("bad theta kind");
}

ScalarSeries theta_prime_const_over_2pi(int order) {
  ScalarSeries p = phi_power(3, order);
  p.eighth = 1;
  return p;
}

ScalarSeries theta_const8(ThetaKind k, int order) {
  ScalarSeries p = qs_pow(theta_const(k, order), 8);
  return qs_fold_prefactor(p);
}

ScalarSeries jacobi_identity_residual(int order) {
  ScalarSeries p = ScalarSeries::one(order);
  for (int m = 1; m < order; ++m) {
    if (m % 2 == 0) {
      p = qs_mul(p, scalar_lin(+1, m, order));
    } else {
      p = qs_mul(p, qs_mul(scalar_lin(-1, m, order), scalar_lin(+1, m, order)));
    }
  }
  return qs_sub(p, ScalarSeries::one(order));
}

ScalarSeries phi_power(int n, int order) {
  ScalarSeries p = ScalarSeries::one(order);
  for (int m = 2; m < order; m += 2) p = qs_mul(p, scalar_lin(-1, m, order));
  return qs_pow(p, n);
}

namespace {

long divisor_power_sum(int n, int p) {
  long s = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long a = 1, b = 1;
    for (int i = 0; i < p; ++i) {
      a *= d;
      b *= n / d;
    }
    s += a;
    if (d != n / d) s += b;
  }
  return s;
}

}  // namespace

ScalarSeries eisenstein(int k, int order) {
  long factor;
  switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw std::invalid_argument("eisenstein weight must be 2, 4 or 6");
  }
  ScalarSeries e = ScalarSeries::one(order);
  for (int n = 1; 2 * n < order; ++n)
    e.c[2 * n] = Rat(factor) * Rat(divisor_power_sum(n, k - 1));
  return e;
}

// ---- numeric side --------------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Cx kI{0.0, 1.0};

struct ThetaParts {
  Cx pref;       // v-dependent prefactor (includes the constant 2 q^{1/8})
  Cx pref_dv;    // d/dv of pref
  Cx prod;       // full product over j (v-dependent and v-independent parts)
  Cx dlog_prod;  // d/dv log(prod)
};

ThetaParts theta_parts(ThetaKind k, Cx v, Cx tau, int n_terms) {
  const Cx q = std::exp(2.0 * kPi * kI * tau);
  const Cx qh = std::exp(kPi * kI * tau);  // q^{1/2}
  const Cx ep = std::exp(2.0 * kPi * kI * v);
  const Cx em = 1.0 / ep;
  const Cx dep = 2.0 * kPi * kI * ep;   // d(ep)/dv
  const Cx dem = -2.0 * kPi * kI * em;  // d(em)/dv

  ThetaParts r;
  double sp, sm;  // factor signs: (1 + sp*ep*q^a)(1 + sm*em*q^a)
  bool half;      // exponents a = j - 1/2 instead of j
  switch (k) {
    case ThetaKind::TH: {
      const Cx c = 2.0 * std::exp(kPi * kI * tau / 4.0);
      r.pref = c * std::sin(kPi * v);
      r.pref_dv = c * kPi * std::cos(kPi * v);
      sp = sm = -1.0;
      half = false;
      break;
    }
    case ThetaKind::TH1: {
      const Cx c = 2.0 * std::exp(kPi * kI * tau / 4.0);
      r.pref = c * std::cos(kPi * v);
      r.pref_dv = -c * kPi * std::sin(kPi * v);
      sp = sm = 1.0;
      half = false;
      break;
    }
    case ThetaKind::TH2:
      r.pref = 1.0;
      r.pref_dv = 0.0;
      sp = sm = -1.0;
      half = true;
      break;
    case ThetaKind::TH3:
      r.pref = 1.0;
      r.pref_dv = 0.0;
      sp = sm = 1.0;
      half = true;
      break;
    default:
      throw std::invalid_argument("bad theta kind");
  }

  r.prod = 1.0;
  r.dlog_prod = 0.0;
  Cx qj = 1.0;                  // q^j
  Cx qa = half ? qh : q;        // q^{j-1/2} or q^j
  for (int j = 1; j <= n_terms; ++j) {
    qj *= q;
    r.prod *= 1.0 - qj;
    const Cx fp = 1.0 + sp * ep * qa;
    const Cx fm = 1.0 + sm * em * qa;
    r.prod *= fp * fm;
    r.dlog_prod += sp * dep * qa / fp + sm * dem * qa / fm;
    qa *= q;
  }
  return r;
}

}  // namespace

Cx theta_value(ThetaKind k, Cx v, Cx tau, int n_terms) {
  const ThetaParts p = theta_parts(k, v, tau, n_terms);
  return p.pref * p.prod;
}

Cx theta_dv(ThetaKind k, Cx v, Cx tau, int n_terms) {
  const ThetaParts p = theta_parts(k, v, tau, n_terms);
  return p.pref_dv * p.prod + p.pref * p.prod * p.dlog_prod;
}

Cx e2_value(Cx tau) {
  const Cx q = std::exp(2.0 * kPi * kI * tau);
  const double aq = std::abs(q);
  if (aq >= 0.9) throw std::invalid_argument("tau too close to the real axis");
  Cx sum = 1.0;
  Cx qn = 1.0;
  double bound = 24.0;
  for (int n = 1; n <= 4000; ++n) {
    qn *= q;
    sum -= 24.0 * static_cast<double>(divisor_power_sum(n, 1)) * qn;
    bound = 24.0 * static_cast<double>(n) * static_cast<double>(n) * std::pow(aq, n);
    if (n > 4 && bound < 1e-13) break;
  }
  return sum;
}

const std::vector<ThetaSample>& default_samples() {
  static const std::vector<ThetaSample> s = {
      {{0.20, 0.10}, {0.00, 1.30}},
      {{0.13, -0.21}, {0.30, 1.10}},
      {{0.10, 0.00}, {0.00, 2.00}},
      {{-0.25, 0.04}, {-0.40, 0.90}},
      {{0.31, 0.12}, {0.10, 0.70}},
  };
  return s;
}

const std::vector<TransformLaw>& transform_laws() {
  static const std::vector<TransformLaw> laws = {
      {"2.14", "theta under tau+1 and -1/tau"},
      {"2.15", "theta_1 under tau+1 and -1/tau"},
      {"2.16", "theta_2 under tau+1 and -1/tau"},
      {"2.17", "theta_3 under tau+1 and -1/tau"},
      {"2.18", "d/dv theta under tau+1 and -1/tau"},
      {"2.19", "d/dv theta_1 under tau+1 and -1/tau"},
      {"2.20", "d/dv theta_2 under tau+1 and -1/tau"},
      {"2.21", "d/dv theta_3 under tau+1 and -1/tau"},
      {"2.22", "theta'(0,-1/tau) rescaling"},
      {"2.25", "E_2 under tau+1"},
      {"2.26", "E_2 under -1/tau"},
  };
  return laws;
}

namespace {

// root of tau/i with the principal branch; Re(tau/i) > 0 on the upper half
// plane so the branch cut is never crossed
Cx root_tau_over_i(Cx tau) { return std::sqrt(tau / kI); }

double law_residual(const std::string& id, const ThetaSample& s, int n) {
  const Cx v = s.v, tau = s.tau;
  const Cx stau = -1.0 / tau;
  const Cx rt = root_tau_over_i(tau);
  const Cx gauss = std::exp(kPi * kI * tau * v * v);
  const Cx t8 = std::exp(kPi * kI / 4.0);  // e^{i pi/4}

  auto val = [&](ThetaKind k, Cx vv, Cx tt) { return theta_value(k, vv, tt, n); };
  auto der = [&](ThetaKind k, Cx vv, Cx tt) { return theta_dv(k, vv, tt, n); };

  if (id == "2.14") {
    const double t = std::abs(val(ThetaKind::TH, v, tau + 1.0) - t8 * val(ThetaKind::TH, v, tau));
    const double sres = std::abs(val(ThetaKind::TH, v, stau) -
                                 (1.0 / kI) * rt * gauss * val(ThetaKind::TH, tau * v, tau));
    return std::max(t, sres);
  }
  if (id == "2.15") {
    const double t = std::abs(val(ThetaKind::TH1, v, tau + 1.0) - t8 * val(ThetaKind::TH1, v, tau));
    const double sres =
        std::abs(val(ThetaKind::TH1, v, stau) - rt * gauss * val(ThetaKind::TH2, tau * v, tau));
    return std::max(t, sres);
  }
  if (id == "2.16") {
    const double t = std::abs(val(ThetaKind::TH2, v, tau + 1.0) - val(ThetaKind::TH3, v, tau));
    const double sres =
        std::abs(val(ThetaKind::TH2, v, stau) - rt * gauss * val(ThetaKind::TH1, tau * v, tau));
    return std::max(t, sres);
  }
  if (id == "2.17") {
    const double t = std::abs(val(ThetaKind::TH3, v, tau + 1.0) - val(ThetaKind::TH2, v, tau));
    const double sres =
        std::abs(val(ThetaKind::TH3, v, stau) - rt * gauss * val(ThetaKind::TH3, tau * v, tau));
    return std::max(t, sres);
  }
  if (id == "2.18") {
    const double t = std::abs(der(ThetaKind::TH, v, tau + 1.0) - t8 * der(ThetaKind::TH, v, tau));
    const Cx rhs = (1.0 / kI) * rt * gauss *
                   (2.0 * kPi * kI * tau * v * val(ThetaKind::TH, tau * v, tau) +
                    tau * der(ThetaKind::TH, tau * v, tau));
    return std::max(t, std::abs(der(ThetaKind::TH, v, stau) - rhs));
  }
  if (id == "2.19") {
    const double t = std::abs(der(ThetaKind::TH1, v, tau + 1.0) - t8 * der(ThetaKind::TH1, v, tau));
    const Cx rhs = rt * gauss *
                   (2.0 * kPi * kI * tau * v * val(ThetaKind::TH2, tau * v, tau) +
                    tau * der(ThetaKind::TH2, tau * v, tau));
    return std::max(t, std::abs(der(ThetaKind::TH1, v, stau) - rhs));
  }
  if (id == "2.20") {
    const double t = std::abs(der(ThetaKind::TH2, v, tau + 1.0) - der(ThetaKind::TH3, v, tau));
    const Cx rhs = rt * gauss *
                   (2.0 * kPi * kI * tau * v * val(ThetaKind::TH1, tau * v, tau) +
                    tau * der(ThetaKind::TH1, tau * v, tau));
    return std::max(t, std::abs(der(ThetaKind::TH2, v, stau) - rhs));
  }
  if (id == "2.21") {
    const double t = std::abs(der(ThetaKind::TH3, v, tau + 1.0) - der(ThetaKind::TH2, v, tau));
    const Cx rhs = rt * gauss *
                   (2.0 * kPi * kI * tau * v * val(ThetaKind::TH3, tau * v, tau) +
                    tau * der(ThetaKind::TH3, tau * v, tau));
    return std::max(t, std::abs(der(ThetaKind::TH3, v, stau) - rhs));
  }
  if (id == "2.22") {
    return std::abs(der(ThetaKind::TH, 0.0, stau) -
                    (1.0 / kI) * rt * tau * der(ThetaKind::TH, 0.0, tau));
  }
  if (id == "2.25") {
    return std::abs(e2_value(tau + 1.0) - e2_value(tau));
  }
  if (id == "2.26") {
    return std::abs(e2_value(stau) - (tau * tau * e2_value(tau) - 6.0 * kI * tau / kPi));
  }
  throw std::invalid_argument("unknown transformation law id: " + id);
}

}  // namespace

double transform_residual(const std::string& law_id,
                          const std::vector<ThetaSample>& samples, int n_terms) {
  double worst = 0.0;
  for (const ThetaSample& s : samples)
    worst = std::max(worst, law_residual(law_id, s, n_terms));
  return worst;
}

Cx parse_complex(const std::string& text) {
  const auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("bad complex literal '" + text +
                                 "' (expected forms: 2, -1.5, i, 2i, 1+2i)");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw bad();

  // number with an optional sign, stripped of any trailing 'i'
  const auto to_double = [&](std::string part, bool imag_unit) -> double {
    if (imag_unit) {
      if (part.empty() || part == "+") return 1.0;
      if (part == "-") return -1.0;
    }
    try {
      size_t used = 0;
      const double x = std::stod(part, &used);
      if (used != part.size()) throw bad();
      return x;
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  };

  if (s.back() != 'i') return Cx(to_double(s, false), 0.0);
  s.pop_back();
  // split at the last +/- that starts the imaginary term (not a leading sign
  // and not an exponent sign)
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Cx(0.0, to_double(s, true));
  return Cx(to_double(s.substr(0, split), false),
            to_double(s.substr(split), true));
}

}  // namespace e8check
