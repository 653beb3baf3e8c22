#include "twistgrp/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistgrp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

const Check& Report::check(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return c;
  throw std::out_of_range("no check '" + id + "' in report " + suite_);
}

bool Report::has_check(const std::string& id) const noexcept {
  return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
}

Check& Report::add(Check c) {
  if (has_check(c.id)) throw std::invalid_argument("duplicate check id '" + c.id + "'");
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& Report::run(std::string id, std::string description, std::string claim, const std::function<void(Check&)>& body) {
  Check c{std::move(id), std::move(description), std::move(claim)};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.details["error"] = e.what();
  }
  c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return add(std::move(c));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + "." + c.id;
    add(std::move(c));
  }
}

bool Report::passed() const noexcept { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const noexcept {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j{{"id", c.id}, {"description", c.description}, {"claim", c.claim}, {"status", to_string(c.status)}, {"details", c.details}};
    if (with_timings) j["wall_ms"] = c.wall_ms;
    checks.push_back(std::move(j));
  }
  return {{"schema", kReportSchema},
          {"suite", suite_},
          {"passed", passed()},
          {"counts", {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}}},
          {"checks", std::move(checks)}};
}

std::string Report::summary() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    out << "[" << tag << "] " << c.id << "  " << c.description << "\n";
  }
  return out.str();
}

}  // namespace twistgrp
