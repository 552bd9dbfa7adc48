#pragma once

// Jacobi theta machinery in two guises.
//
// Exact side: q-expansions of the four theta kernels per root (normalized to
// 1 at root = 0), the eighth-power theta constants, Eisenstein series, and
// the eta-like products prod (1-q^n)^k.  The bare constants theta_i(0, tau)
// carry their q^{1/8} prefactor exactly and never leave this module except
// in prefactor-free combinations.
//
// Numeric side: complex evaluation of the product forms and their
// v-derivatives, used to spot-check the modular transformation laws that the
// exact engine cannot express (they mix tau -> -1/tau with pi factors).

#include <complex>
#include <string>
#include <vector>

#include "e8check/graded.hpp"

namespace e8check {

enum class ThetaKind { TH, TH1, TH2, TH3 };

const char* theta_kind_name(ThetaKind k);

// Tilde-normalized per-root tower factors; u = q^{1/2} truncation `order`.
EvenRootSeries qexp_sym_tower(int order);                  // prod_n (1-q^n)^2 / [(1-q^n e^X)(1-q^n e^-X)]
EvenRootSeries qexp_wedge_tower(int order);                // prod_n (1+q^n e^X)(1+q^n e^-X) / (1+q^n)^2
EvenRootSeries qexp_wedge_tower_half(int sign, int order); // prod_n (1 +- q^{n-1/2} e^X)(...) / (1 +- q^{n-1/2})^2

// theta kernels as ratios normalized to 1 at the root origin:
//   TH  : x theta'(0)/theta(x)    with q^0 slice (X/2)/sinh(X/2)
//   TH1 : theta_1(x)/theta_1(0)   with q^0 slice cosh(X/2)
//   TH2 : theta_2(x)/theta_2(0)
//   TH3 : theta_3(x)/theta_3(0)
EvenRootSeries theta_ratio(ThetaKind k, int order);

// theta_i(0, tau)^8 with the prefactor folded away (TH has no constant).
ScalarSeries theta_const8(ThetaKind k, int order);

// Bare constants, exact prefactor kept: theta_1(0) = 2 q^{1/8} prod ...,
// eighth = 1; theta_2, theta_3 have eighth = 0.
ScalarSeries theta_const(ThetaKind k, int order);
// theta'(0, tau) = 2 pi q^{1/8} prod (1-q^n)^3, with the 2 pi stripped.
ScalarSeries theta_prime_const_over_2pi(int order);

// prod_n (1+q^n)(1-q^{n-1/2})(1+q^{n-1/2}) - 1, identically zero by the
// Jacobi identity; kept as an exact residual.
ScalarSeries jacobi_identity_residual(int order);

ScalarSeries eisenstein(int k, int order);  // k = 2, 4, 6
ScalarSeries phi_power(int n, int order);   // prod_{j>=1} (1-q^j)^n, any integer n

// ---- numeric spot checks ------------------------------------------------

using Cx = std::complex<double>;

Cx theta_value(ThetaKind k, Cx v, Cx tau, int n_terms);
Cx theta_dv(ThetaKind k, Cx v, Cx tau, int n_terms);  // d/dv of the above
Cx e2_value(Cx tau);  // series with tail below 1e-10 of the leading term

struct ThetaSample {
  Cx v;
  Cx tau;
};

// Five standard sample points in the upper half plane.
const std::vector<ThetaSample>& default_samples();

struct TransformLaw {
  std::string id;        // e.g. "2.15"
  std::string summary;   // human-readable statement
};

// The 11 numerically checkable transformation laws: four value laws, four
// derivative laws (each bundling the T and S actions), the theta'(0,-1/tau)
// law and the two Eisenstein E2 laws.
const std::vector<TransformLaw>& transform_laws();

// Max |LHS - RHS| of the law over the samples.
double transform_residual(const std::string& law_id,
                          const std::vector<ThetaSample>& samples, int n_terms);

// Complex literal parser for sample points: "0", "1.5", "i", "-i", "2i",
// "0.3+1.1i", "1e-3-2i".  Throws std::invalid_argument on anything else.
Cx parse_complex(const std::string& text);

}  // namespace e8check
