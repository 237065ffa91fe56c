#pragma once

#include <json.hpp>

#include <string>

namespace gf {

/// Outcome of a batch of exact checks. Failures keep both sides' values for diagnosis.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  /// Returns ok so callers can chain on it.
  bool expect(bool ok, const std::string& label, nlohmann::json lhs = nullptr, nlohmann::json rhs = nullptr) {
    ++checks_;
    if (!ok) {
      nlohmann::json f = {{"check", label}};
      if (!lhs.is_null()) f["lhs"] = std::move(lhs);
      if (!rhs.is_null()) f["rhs"] = std::move(rhs);
      failures_.push_back(std::move(f));
    }
    return ok;
  }

  void note(const std::string& key, nlohmann::json value) { notes_[key] = std::move(value); }
  nlohmann::json& notes() { return notes_; }
  const nlohmann::json& notes() const { return notes_; }

  /// Folds another report's counts and failures into this one, prefixing labels.
  void absorb(const Report& other) {
    checks_ += other.checks_;
    for (auto f : other.failures_) {
      f["check"] = other.name_ + ": " + f["check"].get<std::string>();
      failures_.push_back(std::move(f));
    }
  }

  const std::string& name() const { return name_; }
  bool passed() const { return failures_.empty(); }
  long checks() const { return checks_; }
  const nlohmann::json& failures() const { return failures_; }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"name", name_}, {"passed", passed()}, {"checks", checks_}};
    if (!failures_.empty()) j["failures"] = failures_;
    if (!notes_.empty()) j["details"] = notes_;
    return j;
  }

 private:
  std::string name_;
  long checks_ = 0;
  nlohmann::json failures_ = nlohmann::json::array();
  nlohmann::json notes_ = nlohmann::json::object();
};

}  // namespace gf
