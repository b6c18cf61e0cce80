#include "gspin/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gspin {

using nlohmann::json;

std::string report_to_json(const Report& r) {
  json j;
  j["meta"]["group"] = r.meta.group;
  j["meta"]["window"] = r.meta.window;
  j["meta"]["seed"] = r.meta.seed;
  j["meta"]["scalar-mode"] = r.meta.scalar_mode;
  j["meta"]["tol"] = r.meta.tol;
  j["meta"]["version"] = r.meta.version;
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json row;
    row["id"] = c.id;
    row["paper_ref"] = c.paper_ref;
    row["mode"] = c.mode;
    row["status"] = c.status;
    if (!c.witness.empty()) row["witness"] = c.witness;
    row["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.meta.group = j.at("meta").at("group").get<std::string>();
  r.meta.window = j.at("meta").at("window").get<std::string>();
  r.meta.seed = j.at("meta").at("seed").get<std::uint64_t>();
  r.meta.scalar_mode = j.at("meta").at("scalar-mode").get<std::string>();
  r.meta.tol = j.at("meta").at("tol").get<double>();
  r.meta.version = j.at("meta").at("version").get<std::string>();
  for (const auto& row : j.at("checks")) {
    CheckRow c;
    c.id = row.at("id").get<std::string>();
    c.paper_ref = row.at("paper_ref").get<std::string>();
    c.mode = row.at("mode").get<std::string>();
    c.status = row.at("status").get<std::string>();
    if (row.contains("witness")) c.witness = row.at("witness").get<std::string>();
    c.elapsed_ms = row.at("elapsed_ms").get<std::int64_t>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "group=" << r.meta.group << " window=" << r.meta.window
      << " seed=" << r.meta.seed << " scalars=" << r.meta.scalar_mode
      << " tol=" << r.meta.tol << " version=" << r.meta.version << "\n";
  size_t idw = 8, refw = 9;
  for (const auto& c : r.checks) {
    idw = std::max(idw, c.id.size());
    refw = std::max(refw, c.paper_ref.size());
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << pad("check", idw) << "  " << pad("paper_ref", refw) << "  "
      << pad("mode", 8) << "  " << pad("status", 7) << "  ms      witness\n";
  for (const auto& c : r.checks) {
    out << pad(c.id, idw) << "  " << pad(c.paper_ref, refw) << "  "
        << pad(c.mode, 8) << "  " << pad(c.status, 7) << "  "
        << pad(std::to_string(c.elapsed_ms), 6) << "  " << c.witness << "\n";
  }
  int fails = 0;
  for (const auto& c : r.checks)
    if (c.status == "fail" || c.status == "error") ++fails;
  out << (fails == 0 ? "ALL CHECKS PASSED" : std::to_string(fails) + " CHECK(S) FAILED")
      << " (" << r.checks.size() << " rows)\n";
  return out.str();
}

}  // namespace gspin
