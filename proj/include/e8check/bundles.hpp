#pragma once

// Characteristic-form side of the verification engine.
//
// Two ingredients live here.  First, a small expression language for virtual
// bundles built from the complexified tangent bundle, the Euler-class plane,
// the spinor bundle, and the three E8 series, closed under direct sum, tensor
// product, exterior/symmetric powers, and rank reduction.  ch() evaluates the
// Chern character of such an expression as an exact GradedElem.  Second, the
// q-series constants of the geometric side: the classical genera, the Witten
// towers over the tangent bundle and the Euler plane, and the E8 characters
// with their graded pieces.
//
// Everything is computed once, eagerly, by Context's constructor; all lookups
// afterwards are const references.

#include <array>
#include <string>
#include <vector>

#include "e8check/graded.hpp"
#include "e8check/theta.hpp"

namespace e8check {

// ---------------------------------------------------------------------------
// bundle expressions

// Atoms of the expression language.  TC is the complexified tangent bundle
// (rank 12), XiC the complexified Euler plane (rank 2), Delta the spinor
// bundle (rank 64).  W1..W3 are the degree-one pieces of the E8 characters
// V1..V3 and Wbar1..Wbar3 the degree-two pieces; their Chern characters are
// taken from the Context rather than re-derived per expression.
enum class BundleAtom { TC, XiC, W1, W2, W3, Wbar1, Wbar2, Wbar3, Delta };

struct BundleExpr {
  enum class Node { Scalar, Atom, Sum, Diff, Tensor, Wedge, Sym, Tilde };

  Node node = Node::Scalar;
  Rat scalar{0};                 // Node::Scalar payload
  BundleAtom atom = BundleAtom::TC;
  int k = 0;                     // wedge/sym order
  std::vector<BundleExpr> args;  // 2 for Sum/Diff/Tensor, 1 for Wedge/Sym/Tilde
};

// Parses the expression grammar
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := INTEGER | ATOM | FUNC | '(' expr ')'
//   FUNC    := 'wedge' '(' INTEGER ',' expr ')'
//            | 'sym'   '(' INTEGER ',' expr ')'
//            | 'tilde' '(' expr ')'
//
// with atoms TC, XiC, W1, W2, W3, Wbar1, Wbar2, Wbar3, Delta.  Wedge orders
// up to 4 and sym orders up to 2 are supported.  Malformed input throws
// std::invalid_argument whose message carries the source line and a caret
// under the offending column.
BundleExpr parse_bundle_expr(const std::string& src);

// ---------------------------------------------------------------------------
// Witten towers

// The five q-series of bundles whose Chern characters drive the geometric
// side.  Theta1/Theta2/Theta3 are towers over the reduced tangent bundle
// alone (symmetric tower times one of the three exterior towers); Theta
// additionally carries the three exterior towers of the reduced Euler plane;
// Phi stacks all four tower types over the reduced tangent bundle.
enum class WittenKind { Theta1, Theta2, Theta3, Theta, Phi };

const char* witten_kind_name(WittenKind kind);

// Evaluates a per-root-pair kernel f(s), s = x^2, at the Euler plane's root
// pair {U, -U}: every s becomes U^2 and no product over pairs is taken (the
// plane contributes exactly one pair).
GradedSeries eval_at_euler_pair(const EvenRootSeries& f);

// ---------------------------------------------------------------------------
// context

// All precomputed data for one truncation order (in powers of u = q^{1/2}).
// Requires order >= 5 so that the degree-two pieces of the E8 characters
// exist; the verification drivers use far more.
struct Context {
  explicit Context(int order);

  int order;

  // Eisenstein series E2, E4, E6
  ScalarSeries e2, e4, e6;

  // multiplicative genera of the 12-manifold and the Euler-plane factor
  GradedElem ahat_form;     // prod over root pairs of (x/2)/sinh(x/2)
  GradedElem lhat_form;     // prod over root pairs of x/tanh(x/2); degree 0 part 64
  GradedElem cosh_half_u;   // cosh(U/2)
  GradedElem delta_ch;      // ch of the spinor bundle, prod 2cosh(x/2); degree 0 part 64

  // Chern characters of the atoms with fixed finite rank
  GradedElem tc_ch;         // 12 + pX2 + pX4/12 + pX6/360
  GradedElem xic_ch;        // 2 + U^2 + U^4/12 + U^6/360

  // Witten towers, indexed by WittenKind
  std::array<GradedSeries, 5> witten;

  // E8 side, indexed by bundle 0..2: half sums over the theta constants,
  // characters V_i = halfsum / phi^8, and the graded pieces W_i, Wbar_i
  std::array<GradedSeries, 3> halfsum;
  std::array<GradedSeries, 3> v_ch;
  std::array<GradedElem, 3> w_ch;
  std::array<GradedElem, 3> wbar_ch;

  const GradedSeries& witten_series(WittenKind kind) const {
    return witten[static_cast<int>(kind)];
  }
};

// Chern character of a bundle expression.  Additive over Sum/Diff,
// multiplicative over Tensor; Tilde subtracts the rank (the degree-zero
// part); Wedge and Sym expand through the Newton recurrences in the Adams
// operations.  Exact.
GradedElem ch(const Context& ctx, const BundleExpr& expr);

// convenience: parse + evaluate
GradedElem ch(const Context& ctx, const std::string& src);

// Newton recurrences on a raw Chern character, without the expression
// language's order caps: ch of the k-th exterior respectively symmetric
// power of anything whose character is chE.
GradedElem wedge_power_ch(const GradedElem& chE, int k);
GradedElem sym_power_ch(const GradedElem& chE, int k);

}  // namespace e8check
