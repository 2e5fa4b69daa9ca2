#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minrep {

enum class Status { Pass, Fail, Inconclusive };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

inline Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  bool exact = true;
  nlohmann::ordered_json residual;  // rational string for exact checks, number otherwise
  std::size_t samples = 0;
  std::string detail;
  nlohmann::ordered_json data;  // optional structured payload

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["status"] = to_string(status);
    j["exact"] = exact;
    j["residual"] = residual;
    if (samples != 0) j["samples"] = samples;
    if (!detail.empty()) j["detail"] = detail;
    if (!data.is_null()) j["data"] = data;
    return j;
  }
};

inline CheckResult exact_check(std::string name, bool ok, std::string residual, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.exact = true;
  c.residual = std::move(residual);
  c.detail = std::move(detail);
  return c;
}

inline CheckResult float_check(std::string name, bool ok, double residual, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.exact = false;
  c.residual = residual;
  c.detail = std::move(detail);
  return c;
}

/// Outcome of a check suite: a list of named checks with an aggregate status.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  CheckResult& add(CheckResult c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  /// Appends the checks of another report, prefixing their names with its suite.
  void merge(const VerificationReport& other) {
    for (CheckResult c : other.checks_) {
      if (!other.suite_.empty()) c.name = other.suite_ + "/" + c.name;
      checks_.push_back(std::move(c));
    }
  }

  Status status() const {
    Status s = Status::Pass;
    for (const auto& c : checks_) s = combine(s, c.status);
    return s;
  }
  bool passed() const { return status() == Status::Pass; }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
      if (c.status == Status::Fail) out.push_back(c.name);
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["status"] = to_string(status());
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) arr.push_back(c.to_json());
    j["checks"] = std::move(arr);
    return j;
  }

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

}  // namespace minrep
