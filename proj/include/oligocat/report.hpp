// Pass/fail lists with witnesses, shared by the verification code.
#pragma once

#include <string>
#include <vector>

namespace olig {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;  // witness on failure, value summary on success
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back(Check{std::move(name), ok, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.ok, c.detail});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
  std::string str() const {
    std::string s;
    if (!title.empty()) s += "# " + title + "\n";
    for (const auto& c : checks) {
      s += std::string(c.ok ? "PASS " : "FAIL ") + c.name;
      if (!c.detail.empty()) s += "  [" + c.detail + "]";
      s += "\n";
    }
    return s;
  }
};

}  // namespace olig
