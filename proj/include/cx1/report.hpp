#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cx1 {

struct Finding {
  std::string check;
  bool passed = false;
  std::string detail;
};

// Validators never throw on bad data; they collect one Finding per check.
class Report {
 public:
  void pass(std::string check, std::string detail = {}) {
    findings_.push_back({std::move(check), true, std::move(detail)});
  }
  void fail(std::string check, std::string detail) {
    findings_.push_back({std::move(check), false, std::move(detail)});
  }
  void append(const Report& other) {
    findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
  }

  bool ok() const {
    for (const auto& f : findings_)
      if (!f.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& f : findings_) k += f.passed ? 0 : 1;
    return k;
  }
  const std::vector<Finding>& findings() const { return findings_; }

 private:
  std::vector<Finding> findings_;
};

}  // namespace cx1
