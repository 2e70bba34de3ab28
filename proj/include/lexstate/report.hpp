#ifndef LEXSTATE_REPORT_HPP
#define LEXSTATE_REPORT_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lexstate {

/// Malformed input: wrong table dimensions, out-of-range indices, missing
/// fields, partial maps. Distinct from an axiom failing.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its domain (for example a
/// non-IBP0 algebra handed to radical()).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A result that a theorem guarantees failed to hold. Signals either an
/// invalid input structure or a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Violation {
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one axiom (or identity) over all of its checked instances.
struct CheckResult {
  static constexpr std::size_t kMaxRecorded = 64;

  std::string axiom;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Violation> violations;  // first kMaxRecorded only
  std::string note;

  bool passed() const { return failures == 0; }

  void fail(std::vector<std::string> witness, std::string lhs = {}, std::string rhs = {}) {
    ++failures;
    if (violations.size() < kMaxRecorded) violations.push_back({std::move(witness), std::move(lhs), std::move(rhs)});
  }
};

/// Per-axiom verdicts for one structure. A report with a window is only a
/// statement about the finite window it scanned.
class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string subject, std::optional<int> window = std::nullopt)
      : subject_(std::move(subject)), window_(window) {}

  CheckResult& add(std::string axiom);
  /// A property that is reported (with witnesses) but does not affect the
  /// verdict, e.g. prelinearity of a semihoop.
  CheckResult& add_property(std::string name);
  void set_flag(std::string name, bool value);
  void merge(const ValidationReport& other, const std::string& prefix = {});

  bool ok() const;
  const std::string& subject() const { return subject_; }
  std::optional<int> window() const { return window_; }
  const std::deque<CheckResult>& checks() const { return checks_; }
  const std::deque<CheckResult>& properties() const { return properties_; }
  const std::vector<std::pair<std::string, bool>>& flags() const { return flags_; }

  /// Looks up a check, then a property, by name.
  const CheckResult* find(const std::string& axiom) const;
  bool passed(const std::string& axiom) const;
  std::optional<bool> flag(const std::string& name) const;
  const CheckResult* first_failure() const;

  /// "valid", "window-verified (N)" or "invalid".
  std::string verdict() const;

  nlohmann::ordered_json to_json() const;
  /// One line per check: name, pass/fail, witness; then one per property
  /// with holds/fails.
  std::string to_tsv() const;

 private:
  std::string subject_;
  std::optional<int> window_;
  std::deque<CheckResult> checks_;  // references from add() stay valid
  std::deque<CheckResult> properties_;
  std::vector<std::pair<std::string, bool>> flags_;
};

}  // namespace lexstate

#endif  // LEXSTATE_REPORT_HPP
