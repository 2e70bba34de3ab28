#include "lexstate/report.hpp"

#include <algorithm>
#include <sstream>

namespace lexstate {

CheckResult& ValidationReport::add(std::string axiom) {
  checks_.push_back(CheckResult{});
  checks_.back().axiom = std::move(axiom);
  return checks_.back();
}

CheckResult& ValidationReport::add_property(std::string name) {
  properties_.push_back(CheckResult{});
  properties_.back().axiom = std::move(name);
  return properties_.back();
}

void ValidationReport::set_flag(std::string name, bool value) {
  for (auto& [k, v] : flags_) {
    if (k == name) {
      v = value;
      return;
    }
  }
  flags_.emplace_back(std::move(name), value);
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    checks_.push_back(c);
    checks_.back().axiom = prefix + c.axiom;
  }
  for (const auto& c : other.properties_) {
    properties_.push_back(c);
    properties_.back().axiom = prefix + c.axiom;
  }
  for (const auto& [k, v] : other.flags_) set_flag(prefix + k, v);
}

bool ValidationReport::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* ValidationReport::find(const std::string& axiom) const {
  for (const auto& c : checks_) {
    if (c.axiom == axiom) return &c;
  }
  for (const auto& c : properties_) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

bool ValidationReport::passed(const std::string& axiom) const {
  const CheckResult* c = find(axiom);
  return c != nullptr && c->passed();
}

std::optional<bool> ValidationReport::flag(const std::string& name) const {
  for (const auto& [k, v] : flags_) {
    if (k == name) return v;
  }
  return std::nullopt;
}

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return &c;
  }
  return nullptr;
}

std::string ValidationReport::verdict() const {
  if (!ok()) return "invalid";
  if (window_) return "window-verified (" + std::to_string(*window_) + ")";
  return "valid";
}

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject_;
  j["verdict"] = verdict();
  if (window_) j["window"] = *window_;
  auto& flags = j["flags"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : flags_) flags[k] = v;
  auto render = [](const CheckResult& c) {
    nlohmann::ordered_json cj;
    cj["axiom"] = c.axiom;
    cj["passed"] = c.passed();
    cj["instances"] = c.instances;
    if (!c.note.empty()) cj["note"] = c.note;
    if (!c.passed()) {
      cj["failures"] = c.failures;
      const Violation& v = c.violations.front();
      cj["witness"] = v.witness;
      cj["lhs"] = v.lhs;
      cj["rhs"] = v.rhs;
    }
    return cj;
  };
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) checks.push_back(render(c));
  if (!properties_.empty()) {
    auto& props = j["properties"] = nlohmann::ordered_json::array();
    for (const auto& c : properties_) props.push_back(render(c));
  }
  return j;
}

std::string ValidationReport::to_tsv() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << c.axiom << '\t' << (c.passed() ? "pass" : "fail") << '\t';
    if (!c.passed()) {
      const auto& w = c.violations.front().witness;
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    }
    os << '\n';
  }
  for (const auto& c : properties_) {
    os << c.axiom << '\t' << (c.passed() ? "holds" : "fails") << '\t';
    if (!c.passed()) {
      const auto& w = c.violations.front().witness;
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace lexstate
