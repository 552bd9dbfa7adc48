#pragma once

// Result records for the identity checks, with text and JSON renderings.
// The JSON form round-trips exactly: rationals travel as "p/q" strings.

#include <optional>
#include <string>
#include <vector>

#include "e8check/graded.hpp"

namespace e8check {

enum class CheckKind { Kernel, Fit, Theorem, Lemma };
enum class CheckStatus { Pass, StatementDeviation, Fail };

const char* check_kind_name(CheckKind k);
const char* check_status_name(CheckStatus s);
CheckKind check_kind_from_name(const std::string& name);
CheckStatus check_status_from_name(const std::string& name);

// Location of the first coefficient where two sides disagree.  q_power is an
// exact power of q ("2", "5/2"); monomial is the canonical monomial name with
// "1" for the scalar slot; lhs/rhs are the exact rational coefficients of the
// two compared sides, in the order the identity states them.
struct Mismatch {
  std::string q_power;
  std::string monomial;
  std::string lhs;
  std::string rhs;
  bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
  std::string id;
  CheckKind kind = CheckKind::Kernel;
  CheckStatus status = CheckStatus::Fail;
  int q_order = 0;       // coefficients checked through q^{q_order}
  int degree_order = 6;  // graded degrees checked through this weight
  std::vector<std::string> lambda;  // fitted modular coefficients, rendered
  std::optional<Mismatch> first_mismatch;
  bool operator==(const VerificationReport&) const = default;
};

std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& json_text);

std::string reports_json(const std::vector<VerificationReport>& rs);

// 0 when everything passed, 2 when every derived check passed but some
// printed statement deviates, 1 when a derived check failed
int exit_code_for(const std::vector<VerificationReport>& rs);

// q-expansion renderings: scalar series on one line, graded coefficients one
// line per power
std::string scalar_series_str(const ScalarSeries& s);
std::string graded_series_str(const GradedSeries& s);

}  // namespace e8check
