#include "hyperring/fixture.hpp"

#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

namespace hyperring {

namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw FixtureError(std::string("fixture is missing field '") + key + "'");
  }
  return doc.at(key);
}

template <class T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FixtureError("fixture field '" + what + "' has the wrong type");
  }
}

}  // namespace

FixtureDocument parse_fixture(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FixtureError("fixture must be a JSON object");
  FixtureDocument out;
  out.name = as<std::string>(field(doc, "name"), "name");
  out.elements = as<std::vector<std::string>>(field(doc, "elements"), "elements");
  out.zero = as<std::string>(field(doc, "zero"), "zero");
  out.one = as<std::string>(field(doc, "one"), "one");
  out.add = as<std::vector<std::vector<std::vector<std::string>>>>(
      field(doc, "add"), "add");
  out.mul = as<std::vector<std::vector<std::string>>>(field(doc, "mul"), "mul");
  if (doc.contains("expected")) out.expected = doc.at("expected");

  const auto n = out.elements.size();
  if (out.add.size() != n || out.mul.size() != n) {
    throw FixtureError("table row count does not match " + std::to_string(n) +
                       " elements");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.add[i].size() != n || out.mul[i].size() != n) {
      throw FixtureError("ragged table row " + std::to_string(i));
    }
  }
  return out;
}

std::string serialize_fixture(const FixtureDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["elements"] = doc.elements;
  j["zero"] = doc.zero;
  j["one"] = doc.one;
  j["add"] = doc.add;
  j["mul"] = doc.mul;
  if (!doc.expected.is_null()) j["expected"] = doc.expected;
  return j.dump(2) + "\n";
}

std::vector<std::string> bundled_fixture_names() {
  return {"example_3_2", "krasner_k2", "sign_hyperfield", "z4_classical"};
}

FixtureDocument load_fixture(const std::string& path_or_name) {
  std::filesystem::path path(path_or_name);
  if (!std::filesystem::exists(path)) {
    auto bundled = std::filesystem::path(HYPERRING_FIXTURE_DIR) /
                   (path_or_name + ".json");
    if (!std::filesystem::exists(bundled)) {
      throw FixtureError("no fixture file or bundled fixture named '" +
                         path_or_name + "'");
    }
    path = bundled;
  }
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fixture(buffer.str());
}

FiniteHyperring to_hyperring(const FixtureDocument& doc) {
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < doc.elements.size(); ++i) {
    index.emplace(doc.elements[i], i);
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw StructuralError("unknown element label '" + label + "'");
    }
    return it->second;
  };
  const auto n = doc.elements.size();
  std::vector<std::vector<FiniteHyperring::AddCell>> add(
      n, std::vector<FiniteHyperring::AddCell>(n));
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  if (doc.add.size() != n || doc.mul.size() != n) {
    throw StructuralError("table shape does not match the carrier");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (doc.add[x].size() != n || doc.mul[x].size() != n) {
      throw StructuralError("ragged table row " + std::to_string(x));
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& label : doc.add[x][y]) add[x][y].push_back(lookup(label));
      mul[x][y] = lookup(doc.mul[x][y]);
    }
  }
  return FiniteHyperring(doc.name, doc.elements, lookup(doc.zero),
                         lookup(doc.one), add, std::move(mul));
}

FixtureDocument from_hyperring(const FiniteHyperring& ring) {
  FixtureDocument doc;
  doc.name = ring.name();
  doc.elements = ring.labels();
  doc.zero = ring.label(ring.zero());
  doc.one = ring.label(ring.one());
  const auto n = ring.size();
  doc.add.assign(n, std::vector<std::vector<std::string>>(n));
  doc.mul.assign(n, std::vector<std::string>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (auto z : ring.add(x, y)) doc.add[x][y].push_back(ring.label(z));
      doc.mul[x][y] = ring.label(ring.mul(x, y));
    }
  }
  return doc;
}

}  // namespace hyperring
