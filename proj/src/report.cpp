#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "e8check/qseries.hpp"
#include "e8check/report.hpp"

namespace e8check {

namespace {

// power of q for the u^k slot: k/2, printed as an exact half-integer
std::string q_power_str(int k) {
  std::ostringstream out;
  if (k % 2 == 0) {
    if (k == 2) return "q";
    out << "q^" << k / 2;
  } else {
    out << "q^(" << k << "/2)";
  }
  return out.str();
}

}  // namespace

std::string scalar_series_str(const ScalarSeries& s) {
  std::ostringstream out;
  if (s.eighth != 0) out << "q^(" << s.eighth << "/8) * (";
  bool first = true;
  for (int k = 0; k < s.order; ++k) {
    const Rat& c = s.c[k];
    if (c == 0) continue;
    Rat mag = c;
    if (first) {
      if (c < 0) {
        out << "-";
        mag = -mag;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -mag;
    }
    const bool unit = (mag == 1);
    if (k == 0) {
      out << rat_str(mag);
    } else {
      if (!unit) out << rat_str(mag) << "*";
      out << q_power_str(k);
    }
  }
  if (first) out << "0";
  out << " + O(" << q_power_str(s.order) << ")";
  if (s.eighth != 0) out << ")";
  return out.str();
}

std::string graded_series_str(const GradedSeries& s) {
  std::ostringstream out;
  if (s.eighth != 0) out << "q^(" << s.eighth << "/8) * the following\n";
  for (int k = 0; k < s.order; ++k) {
    if (s.c[k].is_zero() && k != 0) continue;
    out << q_power_str(k) << ": " << graded_str(s.c[k]) << "\n";
  }
  out << "O(" << q_power_str(s.order) << ")";
  return out.str();
}

const char* check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Kernel: return "kernel";
    case CheckKind::Fit: return "fit";
    case CheckKind::Theorem: return "theorem";
    case CheckKind::Lemma: return "lemma";
  }
  throw std::logic_error("check_kind_name: bad kind");
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::StatementDeviation: return "statement_deviation";
    case CheckStatus::Fail: return "fail";
  }
  throw std::logic_error("check_status_name: bad status");
}

CheckKind check_kind_from_name(const std::string& name) {
  for (CheckKind k : {CheckKind::Kernel, CheckKind::Fit, CheckKind::Theorem, CheckKind::Lemma}) {
    if (name == check_kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown check kind '" + name + "'");
}

CheckStatus check_status_from_name(const std::string& name) {
  for (CheckStatus s :
       {CheckStatus::Pass, CheckStatus::StatementDeviation, CheckStatus::Fail}) {
    if (name == check_status_name(s)) return s;
  }
  throw std::invalid_argument("unknown check status '" + name + "'");
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.id << "  " << check_kind_name(r.kind) << "  ";
  switch (r.status) {
    case CheckStatus::Pass: out << "PASS"; break;
    case CheckStatus::StatementDeviation: out << "STATEMENT DEVIATION"; break;
    case CheckStatus::Fail: out << "FAIL"; break;
  }
  out << "  (through q^" << r.q_order << ", degree " << r.degree_order << ")";
  for (size_t i = 0; i < r.lambda.size(); ++i) {
    out << "\n  lambda[" << i << "] = " << r.lambda[i];
  }
  if (r.first_mismatch) {
    const Mismatch& m = *r.first_mismatch;
    out << "\n  first mismatch at q^" << m.q_power << ", monomial " << m.monomial
        << ": left side " << m.lhs << ", right side " << m.rhs;
  }
  return out.str();
}

namespace {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["kind"] = check_kind_name(r.kind);
  j["status"] = check_status_name(r.status);
  j["q_order"] = r.q_order;
  j["degree_order"] = r.degree_order;
  j["lambda"] = r.lambda;
  if (r.first_mismatch) {
    const Mismatch& m = *r.first_mismatch;
    j["first_mismatch"] = {
        {"q_power", m.q_power}, {"monomial", m.monomial}, {"lhs", m.lhs}, {"rhs", m.rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

VerificationReport from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.kind = check_kind_from_name(j.at("kind").get<std::string>());
  r.status = check_status_from_name(j.at("status").get<std::string>());
  r.q_order = j.at("q_order").get<int>();
  r.degree_order = j.at("degree_order").get<int>();
  r.lambda = j.at("lambda").get<std::vector<std::string>>();
  if (!j.at("first_mismatch").is_null()) {
    const nlohmann::json& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{
        m.at("q_power").get<std::string>(), m.at("monomial").get<std::string>(),
        m.at("lhs").get<std::string>(), m.at("rhs").get<std::string>()};
  }
  return r;
}

}  // namespace

std::string report_json(const VerificationReport& r) { return to_json(r).dump(); }

VerificationReport report_from_json(const std::string& json_text) {
  return from_json(nlohmann::json::parse(json_text));
}

std::string reports_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(2);
}

int exit_code_for(const std::vector<VerificationReport>& rs) {
  bool deviated = false;
  for (const auto& r : rs) {
    if (r.status == CheckStatus::Fail) return 1;
    if (r.status == CheckStatus::StatementDeviation) deviated = true;
  }
  return deviated ? 2 : 0;
}

}  // namespace e8check
