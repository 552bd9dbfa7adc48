#pragma once

// Verification drivers.  Builds the five graded q-series on their two
// independent routes, fits the degree-six components against the modular
// bases of weight 10, 14 and 18, and checks the fifteen catalogued
// identities.  A failed derived check is a hard failure; a printed statement
// that disagrees with the engine is reported as a deviation together with
// the first mismatching monomial and the machine-derived value, and never
// aborts the run.

#include <string>
#include <vector>

#include "e8check/bundles.hpp"
#include "e8check/report.hpp"

namespace e8check {

enum class QId { Q1, Q2, Q3, QP, QL };

struct QSpec {
  QId id;
  const char* name;          // "Q1" .. "QL"
  std::vector<int> bundles;  // E8 factors entering the character product, 1-based
  int weight;                // modular weight of the degree-six component
};

const QSpec& q_spec(QId id);
QId q_id_from_name(const std::string& name);

// the degree-two class multiplying E2/24 inside the exponential prefactor
GradedElem q_e2_class(QId id);

// The two construction routes: Bundle assembles genus forms times Witten
// tower characters times E8 characters; Theta assembles the same series from
// symmetrized theta-function ratios alone.
enum class QRoute { Bundle, Theta };

// full integrand before any degree projection, truncated at ctx.order
GradedSeries build_Q_integrand(const Context& ctx, QId id, QRoute route);

// the degree-six component of the bundle-route integrand
GradedSeries build_Q(const Context& ctx, QId id);

struct FitResult {
  int weight = 0;
  std::vector<GradedElem> lambda;
  GradedSeries residual;
};

// Decomposes a series with graded coefficients over the modular basis of the
// given weight: 10 -> {E4 E6}, 14 -> {E4^2 E6}, 18 -> {E4^3 E6, E6^3}.  The
// coefficients are solved exactly from the leading q-powers; everything past
// them lands in the residual.  Throws if a half-integer power of q survives
// in the input.
FitResult modular_fit(const GradedSeries& s, int weight);

// identity checks; ids are the opaque catalogue labels
VerificationReport verify_kernel_identity(const Context& ctx, const std::string& id);
VerificationReport verify_theorem(const Context& ctx, const std::string& id);
VerificationReport verify_constrained_lemma(const Context& ctx, const std::string& id);

// all fifteen ids in catalogue order
const std::vector<std::string>& all_identity_ids();

// dispatch on the id; throws std::invalid_argument for an unknown id
VerificationReport verify_identity(const Context& ctx, const std::string& id);

}  // namespace e8check
