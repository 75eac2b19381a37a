#ifndef UPROD_REPORT_HPP
#define UPROD_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uprod {

/// Outcome of one named axiom or condition. `witness` holds the basis
/// indices (one per quantified argument) of the first tuple that failed.
struct CheckResult {
  std::string id;
  bool passed = true;
  std::vector<std::uint32_t> witness;
  std::string detail;
};

/// Ordered list of check results for one subject.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  /// Appends every check of `other`, prefixing ids with `prefix` when given.
  void merge(const Report& other, const std::string& prefix = {});

  bool all_passed() const;
  /// nullptr when no check has this id.
  const CheckResult* find(const std::string& id) const;
  bool passed(const std::string& id) const;
  const CheckResult* first_failure() const;
  /// Comma separated failing ids with witnesses, for exception messages.
  std::string failure_summary() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

/// Fixed-width PASS/FAIL table.
std::ostream& operator<<(std::ostream& os, const Report& report);

}  // namespace uprod

#endif  // UPROD_REPORT_HPP
