#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qchl {

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Outcome of one or more axiom checks, in the order they ran.
struct Report {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Report& add(Check c) {
    checks.push_back(std::move(c));
    return *this;
  }

  Report& merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    return *this;
  }
};

inline Check pass(std::string name) { return Check{std::move(name), true, {}, {}}; }

inline Check fail(std::string name, std::vector<std::size_t> witness, std::string detail = {}) {
  return Check{std::move(name), false, std::move(witness), std::move(detail)};
}

}  // namespace qchl
