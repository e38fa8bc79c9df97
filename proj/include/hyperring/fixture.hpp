#pragma once

// JSON fixture documents describing finite hyperrings by their tables.
//
//   {"name": ..., "elements": [labels], "zero": label, "one": label,
//    "add": n x n arrays of label arrays, "mul": n x n labels,
//    "expected": {...}}            // optional golden assertions

#include <string>
#include <vector>

#include "hyperring/kernel.hpp"
#include "json.hpp"

namespace hyperring {

// Unreadable or malformed fixture text.
class FixtureError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

struct FixtureDocument {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<std::vector<std::vector<std::string>>> add;
  std::vector<std::vector<std::string>> mul;
  nlohmann::ordered_json expected;  // null when absent

  bool operator==(const FixtureDocument&) const = default;
};

FixtureDocument parse_fixture(const std::string& text);
std::string serialize_fixture(const FixtureDocument& doc);

// A path to a JSON file, or the name of a bundled fixture.
FixtureDocument load_fixture(const std::string& path_or_name);
std::vector<std::string> bundled_fixture_names();

// Tables to hyperring (unverified). Unknown labels and shape errors throw
// StructuralError.
FiniteHyperring to_hyperring(const FixtureDocument& doc);
FixtureDocument from_hyperring(const FiniteHyperring& ring);

}  // namespace hyperring
