#include "sqtile/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace sqtile {

CheckResult& Report::check(std::string name, std::string identity, double residual, double tolerance) {
  checks_.push_back({std::move(name), std::move(identity), residual, tolerance, residual < tolerance, {}});
  return checks_.back();
}

CheckResult& Report::expect(std::string name, std::string identity, bool ok, std::string note) {
  checks_.push_back({std::move(name), std::move(identity), ok ? 0.0 : 1.0, 0.5, ok, std::move(note)});
  return checks_.back();
}

void Report::append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string Report::to_text() const {
  std::string out;
  char buf[96];
  for (const CheckResult& c : checks_) {
    std::snprintf(buf, sizeof buf, "%s %-44s residual=%.3e tol=%.1e", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.residual, c.tolerance);
    out += buf;
    out += " | " + c.identity;
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const CheckResult& c : checks_) {
    j.push_back({{"name", c.name},
                 {"identity", c.identity},
                 {"residual", c.residual},
                 {"tolerance", c.tolerance},
                 {"passed", c.passed},
                 {"note", c.note}});
  }
  return nlohmann::json{{"passed", all_passed()}, {"failures", failures()}, {"checks", j}}.dump(2);
}

} // namespace sqtile
