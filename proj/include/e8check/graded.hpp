#pragma once

// The coefficient ring for all characteristic-form computations: exact
// rational polynomials in the even power sums of three groups of eight
// roots (pY*_i), the tangent power sums (pX*), and the degree-one class U,
// truncated at total weighted degree 6.  Weighted degree d corresponds to a
// differential form of degree 2d, so the truncation keeps exactly the data
// that can integrate over a 12-dimensional manifold.
//
// Root-indexed kernels enter as EvenRootSeries: q-expansions whose
// coefficients are polynomials of degree <= 3 in s = root^2.  Symmetrizing
// a kernel over a root group lands in the power-sum generators.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "e8check/qseries.hpp"

namespace e8check {

inline constexpr int kMaxDegree = 6;
inline constexpr int kNumGens = 13;

enum class Gen : int {
  U = 0,
  pX2, pX4, pX6,
  pY2_1, pY4_1, pY6_1,
  pY2_2, pY4_2, pY6_2,
  pY2_3, pY4_3, pY6_3,
};

int gen_degree(Gen g);
const char* gen_name(Gen g);
Gen e8_powersum_gen(int bundle, int power);  // bundle 1..3, power 2|4|6

// All monomials of weighted degree <= 6 in the 13 generators, enumerated
// once and ordered canonically: degree ascending, then lexicographically
// by exponents (U before pX2 before ... before pY6_3, higher powers first).
class MonomialTable {
 public:
  static const MonomialTable& get();

  int size() const { return static_cast<int>(monos_.size()); }
  int degree(int idx) const { return monos_[idx].degree; }
  uint8_t exponent(int idx, Gen g) const { return monos_[idx].e[static_cast<int>(g)]; }
  // Product of two monomials by table index; -1 when the degree overflows 6.
  int mul(int i, int j) const { return prod_[i * size() + j]; }
  int index_of_gen(Gen g) const { return gen_index_[static_cast<int>(g)]; }
  int index_of(const std::array<uint8_t, kNumGens>& e) const;
  std::string name(int idx) const;

 private:
  struct Mono {
    std::array<uint8_t, kNumGens> e;
    int degree;
  };
  MonomialTable();
  std::vector<Mono> monos_;
  std::vector<int16_t> prod_;
  std::array<int, kNumGens> gen_index_;
};

// Sparse exact polynomial over the monomial table.  Terms are sorted by
// monomial index and never hold zero coefficients.
class GradedElem {
 public:
  std::vector<std::pair<int, Rat>> terms;

  GradedElem() = default;

  static GradedElem from_rat(const Rat& r);
  static GradedElem gen(Gen g);
  static GradedElem monomial(int idx, const Rat& coeff);

  bool is_zero() const { return terms.empty(); }
  Rat scalar_part() const;
  Rat coeff(int mono_idx) const;
  bool contains(Gen g) const;
  int max_degree() const;

  GradedElem& normalize();  // drop zeros, re-sort (internal invariant repair)
};

GradedElem operator+(const GradedElem& a, const GradedElem& b);
GradedElem operator-(const GradedElem& a, const GradedElem& b);
GradedElem operator-(const GradedElem& a);
GradedElem operator*(const GradedElem& a, const GradedElem& b);
GradedElem operator*(const GradedElem& a, const Rat& r);
GradedElem operator*(const Rat& r, const GradedElem& a);
bool operator==(const GradedElem& a, const GradedElem& b);

GradedElem degree_component(const GradedElem& a, int d);
GradedElem graded_pow(const GradedElem& a, int n);

// Adams operation: the ring endomorphism scaling every generator of
// weighted degree d by m^d (so U -> mU, pX2j -> m^{2j} pX2j).
GradedElem adams(int m, const GradedElem& a);

// Substitution homomorphism var -> repl, applied to every occurrence.
GradedElem substitute(const GradedElem& a, Gen var, const GradedElem& repl);

// Checked constraint elimination: repl must be degree-homogeneous of the
// same degree as var (or zero) and must not mention var.
GradedElem eliminate(const GradedElem& a, Gen var, const GradedElem& repl);

GradedElem graded_inv(const GradedElem& a);            // unit: scalar part != 0
GradedElem graded_exp_nilpotent(const GradedElem& a);  // finite sum, scalar part must vanish

std::string graded_str(const GradedElem& a);

template <>
struct ring<GradedElem> {
  static GradedElem zero() { return GradedElem(); }
  static GradedElem one() { return GradedElem::from_rat(Rat(1)); }
  static bool is_zero(const GradedElem& x) { return x.is_zero(); }
  static bool is_unit(const GradedElem& x) { return sgn(x.scalar_part()) != 0; }
  static bool is_nilpotent(const GradedElem& x) { return sgn(x.scalar_part()) == 0; }
  static GradedElem invert(const GradedElem& x) { return graded_inv(x); }
  static GradedElem scale(const GradedElem& x, const Rat& r) { return x * r; }
  static constexpr bool heavy = true;
};

// Polynomials of degree <= 3 in s, the square of a single root; the
// coefficient ring of per-root kernels.
struct SPoly {
  std::array<Rat, 4> a{Rat(0), Rat(0), Rat(0), Rat(0)};

  SPoly() = default;
  explicit SPoly(std::array<Rat, 4> v) : a(std::move(v)) {}
  static SPoly constant(const Rat& r) { return SPoly({r, Rat(0), Rat(0), Rat(0)}); }

  bool operator==(const SPoly& o) const { return a == o.a; }
};

SPoly operator+(const SPoly& x, const SPoly& y);
SPoly operator-(const SPoly& x, const SPoly& y);
SPoly operator-(const SPoly& x);
SPoly operator*(const SPoly& x, const SPoly& y);

template <>
struct ring<SPoly> {
  static SPoly zero() { return SPoly(); }
  static SPoly one() { return SPoly::constant(Rat(1)); }
  static bool is_zero(const SPoly& x) {
    return sgn(x.a[0]) == 0 && sgn(x.a[1]) == 0 && sgn(x.a[2]) == 0 && sgn(x.a[3]) == 0;
  }
  static bool is_unit(const SPoly& x) { return sgn(x.a[0]) != 0; }
  static bool is_nilpotent(const SPoly& x) { return sgn(x.a[0]) == 0; }
  static SPoly invert(const SPoly& x);
  static SPoly scale(const SPoly& x, const Rat& r) {
    return SPoly({x.a[0] * r, x.a[1] * r, x.a[2] * r, x.a[3] * r});
  }
  static constexpr bool heavy = false;
};

using EvenRootSeries = QxSeries<SPoly>;
using GradedSeries = QxSeries<GradedElem>;

// Exact expansions through s^3 of the even analytic kernels.
SPoly spoly_cosh_full();      // cosh X
SPoly spoly_cosh_half();      // cosh(X/2)
SPoly spoly_two_cosh_half();  // 2 cosh(X/2)
SPoly spoly_sinhc_half();     // sinh(X/2) / (X/2)
SPoly spoly_ahat_kernel();    // (X/2) / sinh(X/2)
SPoly spoly_lhat_kernel();    // X / tanh(X/2)

enum class RootGroup { Tangent, E8_1, E8_2, E8_3, Xi };

int root_count(RootGroup g);
// Power sum of the group's roots: sum root^{2j} as a ring element.
GradedElem root_power_sum(RootGroup g, int two_j);

// sum over roots r of f(s = r^2): count*a0 + a1*p2 + a2*p4 + a3*p6 per slot.
GradedSeries symmetrize_sum(const EvenRootSeries& f, RootGroup g);

// prod over roots r of f(s = r^2), via exp(symmetrize_sum(log f)); the Xi
// group (explicit roots +-U) instead substitutes s = U^2 and squares.
GradedSeries symmetrize_prod(const EvenRootSeries& f, RootGroup g);

// q-independent kernels (pure SPoly) symmetrized the same way.
GradedElem symmetrize_prod_const(const SPoly& f, RootGroup g);

GradedElem spoly_eval_at_u2(const SPoly& f);  // s -> U^2

GradedSeries promote(const ScalarSeries& s);
GradedSeries adams(int m, const GradedSeries& s);
GradedSeries degree_component(const GradedSeries& s, int d);
GradedSeries eliminate(const GradedSeries& s, Gen var, const GradedElem& repl);

}  // namespace e8check
