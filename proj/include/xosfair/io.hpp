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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "xosfair/allocation.hpp"
#include "xosfair/instance.hpp"

namespace xosfair {

/// Instance plus the optional descriptive fields of an instance document.
struct InstanceFile {
  Instance instance;
  std::optional<std::string> name;
  std::optional<std::string> family;
  std::optional<std::uint64_t> seed;
};

/// Instance document (JSON):
///
///   {
///     "name": "lemma1",            optional
///     "family": "lemma1",          optional
///     "seed": 7,                   optional
///     "items": 4,
///     "agents": [ { "functions": [ ["1", "1/2", "0", ...], ... ] }, ... ]
///   }
///
/// Values are strings "p" or "p/q" (bare JSON integers are accepted too).
/// Throws ParseError naming the offending location.
InstanceFile parse_instance(std::string_view text);

/// Canonical form: fixed key order, two-space indent, canonical rationals,
/// trailing newline. parse_instance(serialize_instance(x)) reproduces x.
std::string serialize_instance(const InstanceFile& file);

using Result = std::variant<Allocation, RandomizedAllocation>;

/// Result document:
///   {"kind": "allocation", "agents": n, "owner": [..]}
///   {"kind": "randomized", "agents": n, "support": [{"probability": "1/2", "owner": [..]}, ..]}
Result parse_result(std::string_view text);
std::string serialize_result(const Result& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace xosfair
