#include "uprod/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace uprod {

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto check : other.checks_) {
    if (!prefix.empty()) check.id = prefix + check.id;
    checks_.push_back(std::move(check));
  }
}

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool Report::passed(const std::string& id) const {
  const CheckResult* c = find(id);
  return c != nullptr && c->passed;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

std::string witness_string(const std::vector<std::uint32_t>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

}  // namespace

std::string Report::failure_summary() const {
  std::string out;
  for (const auto& c : checks_) {
    if (c.passed) continue;
    if (!out.empty()) out += ", ";
    out += c.id;
    if (!c.witness.empty()) out += " at " + witness_string(c.witness);
  }
  return out.empty() ? "all checks passed" : "failed " + out;
}

std::ostream& operator<<(std::ostream& os, const Report& report) {
  std::size_t width = 4;
  for (const auto& c : report.checks()) width = std::max(width, c.id.size());
  if (!report.subject().empty()) os << report.subject() << '\n';
  for (const auto& c : report.checks()) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.id << "  "
       << (c.passed ? "PASS" : "FAIL");
    if (!c.passed && !c.witness.empty()) os << "  witness " << witness_string(c.witness);
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os;
}

}  // namespace uprod
