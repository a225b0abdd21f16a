#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ordpoly {

enum class CheckStatus { pass, fail, flagged };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

struct CheckRecord {
  std::string equation;  // identity tag, e.g. "ladder-action"
  std::string params;    // human-readable parameter string, e.g. "n=3"
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  double tolerance = 0.0;  // 0 marks an exact check
  double wall_ms = 0.0;
  std::string note;
};

/// Per-suite result sheet. A suite passes iff no check failed; flagged checks
/// are surfaced separately and never count as passes.
struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
  }
  int count(CheckStatus s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [s](const CheckRecord& c) { return c.status == s; }));
  }

  void sort_records() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
      if (a.equation != b.equation) return a.equation < b.equation;
      return a.params < b.params;
    });
  }

  /// Runs one check, timing it. `exact` semantics: residual 0 iff pass.
  void check_exact(const std::string& equation, const std::string& params,
                   const std::function<bool()>& holds, const std::string& note = "") {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = holds();
    const auto t1 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.equation = equation;
    rec.params = params;
    rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
    rec.residual = ok ? 0.0 : 1.0;
    rec.tolerance = 0.0;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.note = note;
    checks.push_back(std::move(rec));
  }

  void check_numeric(const std::string& equation, const std::string& params,
                     const std::function<double()>& residual, double tolerance,
                     const std::string& note = "") {
    const auto t0 = std::chrono::steady_clock::now();
    double r = residual();
    const auto t1 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.equation = equation;
    rec.params = params;
    rec.status = (r == r && r <= tolerance) ? CheckStatus::pass : CheckStatus::fail;
    rec.residual = r;
    rec.tolerance = tolerance;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.note = note;
    checks.push_back(std::move(rec));
  }

  void flag(const std::string& equation, const std::string& params, const std::string& note) {
    checks.push_back({equation, params, CheckStatus::flagged, 0.0, 0.0, 0.0, note});
  }
};

/// Deterministic JSON body: identical configuration gives byte-identical
/// output. Wall times and the generation timestamp live outside the body, in
/// "timings" and "generated_at".
inline nlohmann::ordered_json report_body(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["equation"] = c.equation;
      jc["params"] = c.params;
      jc["status"] = status_name(c.status);
      jc["residual"] = c.residual;
      jc["tolerance"] = c.tolerance;
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(std::move(jc));
    }
    nlohmann::ordered_json js;
    js["suite"] = r.suite;
    js["passed"] = r.passed();
    js["counts"] = {{"pass", r.count(CheckStatus::pass)},
                    {"fail", r.count(CheckStatus::fail)},
                    {"flagged", r.count(CheckStatus::flagged)}};
    js["checks"] = std::move(checks);
    suites.push_back(std::move(js));
  }
  return suites;
}

inline nlohmann::ordered_json assemble_report(std::vector<VerificationReport> reports,
                                              const nlohmann::ordered_json& config_echo) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.suite < b.suite;
                   });
  for (auto& r : reports) r.sort_records();

  bool all_pass = true;
  int flagged = 0;
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    flagged += r.count(CheckStatus::flagged);
  }

  nlohmann::ordered_json out;
  out["schema_version"] = 1;
  out["config"] = config_echo;
  out["suites"] = report_body(reports);
  out["summary"] = {{"all_passed", all_pass}, {"flagged", flagged}};

  nlohmann::ordered_json timings = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    double total = 0.0;
    for (const auto& c : r.checks) total += c.wall_ms;
    timings.push_back({{"suite", r.suite}, {"wall_ms", total}});
  }
  out["timings"] = std::move(timings);
  out["generated_at"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
  return out;
}

inline void print_report(std::ostream& os, const VerificationReport& r, bool verbose) {
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
     << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
     << r.count(CheckStatus::flagged) << " flagged)\n";
  for (const auto& c : r.checks) {
    if (!verbose && c.status == CheckStatus::pass) continue;
    os << "  [" << status_name(c.status) << "] " << c.equation << " " << c.params;
    if (c.tolerance > 0.0) os << " residual=" << c.residual << " tol=" << c.tolerance;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
}

}  // namespace ordpoly
