// Copyright 2026 The xosfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xosfair/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "xosfair/errors.hpp"

namespace xosfair {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

const Json& member(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where, std::string("missing \"") + key + "\"");
  return *it;
}

Rational parse_value(const Json& node, const std::string& where) {
  Rational r;
  if (node.is_string()) {
    try {
      r = Rational::parse(node.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where, e.what());
    }
  } else if (node.is_number_integer()) {
    r = Rational(node.get<long>());
  } else {
    throw ParseError(where, "expected a rational string such as \"3/4\"");
  }
  if (r.is_negative()) throw ParseError(where, "negative value " + r.str());
  return r;
}

std::size_t parse_index(const Json& node, const std::string& where) {
  if (!node.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer");
  return node.get<std::size_t>();
}

std::vector<std::size_t> parse_owner(const Json& node, std::size_t agents, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected an array of agent indices");
  std::vector<std::size_t> owner;
  for (std::size_t j = 0; j < node.size(); ++j) {
    const std::string at = where + "[" + std::to_string(j) + "]";
    owner.push_back(parse_index(node[j], at));
    if (owner.back() >= agents) throw ParseError(at, "agent index out of range");
  }
  return owner;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("", "instance document must be a JSON object");
  const std::size_t m = parse_index(member(doc, "items", ""), "items");
  const Json& agents = member(doc, "agents", "");
  if (!agents.is_array() || agents.empty()) throw ParseError("agents", "expected a non-empty array");

  std::vector<XosValuation> valuations;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = "agents[" + std::to_string(i) + "]";
    const Json& functions = member(agents[i], "functions", at);
    if (!functions.is_array() || functions.empty()) throw ParseError(at + ".functions", "expected a non-empty array");
    std::vector<AdditiveFunction> family;
    for (std::size_t k = 0; k < functions.size(); ++k) {
      const std::string fat = at + ".functions[" + std::to_string(k) + "]";
      const Json& row = functions[k];
      if (!row.is_array()) throw ParseError(fat, "expected an array of values");
      if (row.size() != m) {
        throw ParseError(fat, "has " + std::to_string(row.size()) + " values, expected " + std::to_string(m));
      }
      std::vector<Rational> values;
      for (std::size_t j = 0; j < m; ++j) values.push_back(parse_value(row[j], fat + "[" + std::to_string(j) + "]"));
      family.emplace_back(std::move(values));
    }
    valuations.emplace_back(std::move(family));
  }

  InstanceFile file{Instance(m, std::move(valuations)), std::nullopt, std::nullopt, std::nullopt};
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name", "expected a string");
    file.name = it->get<std::string>();
  }
  if (auto it = doc.find("family"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("family", "expected a string");
    file.family = it->get<std::string>();
  }
  if (auto it = doc.find("seed"); it != doc.end()) file.seed = parse_index(*it, "seed");
  return file;
}

// Hand-rolled so that each additive function sits on one line.
std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream os;
  os << "{\n";
  if (file.name) os << "  \"name\": " << Json(*file.name).dump() << ",\n";
  if (file.family) os << "  \"family\": " << Json(*file.family).dump() << ",\n";
  if (file.seed) os << "  \"seed\": " << *file.seed << ",\n";
  os << "  \"items\": " << file.instance.item_count() << ",\n";
  os << "  \"agents\": [\n";
  const auto& vals = file.instance.valuations();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    os << "    {\"functions\": [\n";
    for (std::size_t k = 0; k < vals[i].function_count(); ++k) {
      os << "      [";
      const auto& values = vals[i].function(k).values();
      for (std::size_t j = 0; j < values.size(); ++j) os << (j ? ", " : "") << '"' << values[j].str() << '"';
      os << "]" << (k + 1 < vals[i].function_count() ? "," : "") << "\n";
    }
    os << "    ]}" << (i + 1 < vals.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

Result parse_result(std::string_view text) {
  const Json doc = parse_json(text);
  const Json& kind = member(doc, "kind", "");
  const std::size_t agents = parse_index(member(doc, "agents", ""), "agents");
  if (kind == "allocation") {
    return Allocation(agents, parse_owner(member(doc, "owner", ""), agents, "owner"));
  }
  if (kind == "randomized") {
    const Json& support = member(doc, "support", "");
    if (!support.is_array()) throw ParseError("support", "expected an array");
    std::vector<Outcome> outcomes;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const std::string at = "support[" + std::to_string(k) + "]";
      Rational p = parse_value(member(support[k], "probability", at), at + ".probability");
      outcomes.push_back(Outcome{Allocation(agents, parse_owner(member(support[k], "owner", at), agents, at + ".owner")),
                                 std::move(p)});
    }
    try {
      return RandomizedAllocation(std::move(outcomes));
    } catch (const InputError& e) {
      throw ParseError("support", e.what());
    }
  }
  throw ParseError("kind", "expected \"allocation\" or \"randomized\"");
}

std::string serialize_result(const Result& result) {
  Json doc = Json::object();
  if (const auto* a = std::get_if<Allocation>(&result)) {
    doc["kind"] = "allocation";
    doc["agents"] = a->agent_count();
    doc["owner"] = a->owners();
  } else {
    const auto& r = std::get<RandomizedAllocation>(result);
    doc["kind"] = "randomized";
    doc["agents"] = r.support().front().allocation.agent_count();
    Json support = Json::array();
    for (const auto& o : r.support()) {
      support.push_back(Json{{"probability", o.probability.str()}, {"owner", o.allocation.owners()}});
    }
    doc["support"] = std::move(support);
  }
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace xosfair
