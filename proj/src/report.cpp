#include "ringlab/harness.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace ringlab {

std::string report_json(const SuiteReport& report, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = 1;
  j["corpus"] = report.corpus;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["paper_ref"] = c.claim;
    if (c.informational) cj["informational"] = true;
    ordered_json results = ordered_json::array();
    for (const auto& r : c.results) {
      ordered_json rj;
      rj["ring"] = r.ring;
      rj["status"] = status_name(r.result.status);
      if (r.result.witness) {
        rj["witness"] = {{"elements", r.result.witness->elements}, {"text", r.result.witness->text}};
      }
      if (!r.result.reason.empty()) rj["reason"] = r.result.reason;
      if (with_timing) rj["millis"] = r.result.millis;
      results.push_back(std::move(rj));
    }
    cj["results"] = std::move(results);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", report.pass}, {"fail", report.fail}, {"skip", report.skip}};
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    std::size_t p = 0, f = 0, s = 0;
    for (const auto& r : c.results) {
      switch (r.result.status) {
        case Status::Pass: ++p; break;
        case Status::Fail: ++f; break;
        case Status::Skip: ++s; break;
      }
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-14s pass %3zu  fail %3zu  skip %3zu%s\n", c.id.c_str(), p, f, s,
                  c.informational ? "  (informational)" : "");
    out << line;
    for (const auto& r : c.results) {
      if (r.result.status != Status::Fail) continue;
      out << "  FAIL " << r.ring << ": " << (r.result.witness ? r.result.witness->text : r.result.reason) << "\n";
    }
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "pass: " << report.pass << ", fail: " << report.fail << ", skip: " << report.skip << "\n";
  return out.str();
}

}  // namespace ringlab
