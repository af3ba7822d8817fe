#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string details;
};

/// Ordered list of named pass/fail checks.
class Report {
 public:
  void add(std::string id, bool pass, std::string details = {});
  void append(const Report& other, const std::string& prefix = {});
  bool all_pass() const;
  const std::vector<CheckItem>& items() const { return items_; }
  /// Throws std::out_of_range when absent.
  const CheckItem& get(const std::string& id) const;
  bool has(const std::string& id) const;
  std::vector<std::string> failures() const;
  std::string to_text() const;

 private:
  std::vector<CheckItem> items_;
};

/// Malformed input: wrong sizes, bad literals, inconsistent shapes.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction whose defining axioms do not hold; carries the report.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace qhopf
