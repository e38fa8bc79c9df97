#include "hyperring/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hyperring {

void Report::add(std::string check, bool passed, std::string witness,
                 std::string anchor) {
  if (!passed && witness.empty()) witness = "(no witness recorded)";
  entries_.push_back(
      {std::move(check), passed, std::move(witness), std::move(anchor)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    auto entry = e;
    if (!prefix.empty()) entry.check = prefix + "." + entry.check;
    entries_.push_back(std::move(entry));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& e) { return !e.passed; }));
}

std::string Report::to_json() const {
  // ordered_json keeps insertion order, so output is byte-stable.
  nlohmann::ordered_json doc;
  doc["title"] = title_;
  doc["passed"] = passed();
  doc["failures"] = failures();
  auto& list = doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    item["check"] = e.check;
    item["verdict"] = e.passed ? "pass" : "fail";
    item["witness"] = e.witness;
    item["anchor"] = e.anchor;
    list.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out = title_ + "\n";
  for (const auto& e : entries_) {
    out += e.passed ? "  PASS  " : "  FAIL  ";
    out += e.check;
    if (!e.witness.empty()) out += "  " + e.witness;
    out += "\n";
  }
  out += passed() ? "all " + std::to_string(entries_.size()) + " checks passed\n"
                  : std::to_string(failures()) + " of " +
                        std::to_string(entries_.size()) + " checks failed\n";
  return out;
}

}  // namespace hyperring
