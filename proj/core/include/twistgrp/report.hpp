// Verification reports: an ordered list of named checks with outcomes.
#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace twistgrp {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct Check {
  std::string id;
  std::string description;
  std::string claim;  // the mathematical statement being checked
  Status status = Status::Skipped;
  nlohmann::json details = nlohmann::json::object();
  double wall_ms = 0.0;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check& check(const std::string& id) const;
  bool has_check(const std::string& id) const noexcept;

  /// Appends a check; throws std::invalid_argument on a duplicate id.
  Check& add(Check c);
  /// Runs `body`, timing it. The body fills in status and details; an
  /// escaping exception marks the check failed with the message recorded.
  Check& run(std::string id, std::string description, std::string claim, const std::function<void(Check&)>& body);
  /// Appends every check of `other`, prefixing ids with "<prefix>.".
  void merge(const Report& other, const std::string& prefix);

  bool passed() const noexcept;
  std::size_t count(Status s) const noexcept;

  /// Deterministic serialisation; wall times only when requested.
  nlohmann::json to_json(bool with_timings = false) const;
  /// One line per check: "[PASS] id  description".
  std::string summary() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

inline constexpr const char* kReportSchema = "twistgrp-report/1";

}  // namespace twistgrp
