#pragma once

#include <string>
#include <vector>

namespace sqtile {

/// One named identity check with its measured residual.
struct CheckResult {
  std::string name;
  std::string identity; ///< the identity being checked, in word notation
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

class Report {
public:
  /// Records a residual check; passed iff residual < tolerance.
  CheckResult& check(std::string name, std::string identity, double residual, double tolerance);
  /// Records a boolean check (residual 0 on pass, 1 on failure).
  CheckResult& expect(std::string name, std::string identity, bool ok, std::string note = {});
  void append(const Report& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;

  /// One line per check: "PASS name residual=... tol=... | identity".
  std::string to_text() const;
  std::string to_json() const;

private:
  std::vector<CheckResult> checks_;
};

} // namespace sqtile
