#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gspin {

// One verified statement: pass/fail plus the first counterexample found.
struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;  // empty on pass
};

struct ValidationReport {
  std::vector<CheckResult> items;

  bool all_pass() const {
    for (const auto& c : items)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string id, bool pass, std::string witness = "") {
    items.push_back({std::move(id), pass, std::move(witness)});
  }
  void merge(const ValidationReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
  std::string first_failure() const {
    for (const auto& c : items)
      if (!c.pass) return c.id + ": " + c.witness;
    return "";
  }
};

// Row of a suite report, keyed to the statement it verifies.
struct CheckRow {
  std::string id;
  std::string paper_ref;
  std::string mode;  // "exact" or "sampled"
  std::string status;  // "pass", "fail", "skipped", "error"
  std::string witness;
  std::int64_t elapsed_ms = 0;
};

struct ReportMeta {
  std::string group;
  std::string window;
  std::uint64_t seed = 0;
  std::string scalar_mode;
  double tol = 0.0;
  std::string version;
};

struct Report {
  ReportMeta meta;
  std::vector<CheckRow> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "fail" || c.status == "error") return false;
    return true;
  }
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace gspin
