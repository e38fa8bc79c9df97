#pragma once

#include <string>
#include <vector>

namespace hyperring {

struct ReportEntry {
  std::string check;    // stable identifier, e.g. "closure.prime_closed"
  bool passed = false;
  std::string witness;  // always present for failures
  std::string anchor;   // which statement the check exercises
};

// Ordered list of check outcomes with deterministic renderings.
class Report {
 public:
  explicit Report(std::string title = "report") : title_(std::move(title)) {}

  void add(std::string check, bool passed, std::string witness = {},
           std::string anchor = {});
  // Appends every entry of other, prefixing check ids with "<prefix>.".
  void merge(const Report& other, const std::string& prefix = {});

  const std::string& title() const noexcept { return title_; }
  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  bool passed() const;
  std::size_t failures() const;

  std::string to_json() const;  // pretty-printed, keys in fixed order
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
};

}  // namespace hyperring
