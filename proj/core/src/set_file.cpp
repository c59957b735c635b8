// Copyright 2026 The ffgrowth Authors.
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

#include "ffgrowth/set_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "ffgrowth/poly.hpp"
#include "json.hpp"

namespace ffgrowth {
namespace {

using nlohmann::json;

std::uint32_t get_u32(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::kBadSetFile, std::string("set file is missing '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::kBadSetFile, std::string("'") + key + "' must be a non-negative integer");
  }
  const auto raw = v.get<std::uint64_t>();
  if (raw > 0xFFFFFFFFull) throw Error(ErrorCode::kBadSetFile, std::string("'") + key + "' is out of range");
  return static_cast<std::uint32_t>(raw);
}

std::vector<std::uint32_t> get_u32_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::kBadSetFile, std::string("set file is missing '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_array()) throw Error(ErrorCode::kBadSetFile, std::string("'") + key + "' must be a list");
  std::vector<std::uint32_t> out;
  for (const auto& item : v) {
    if (!item.is_number_unsigned() || item.get<std::uint64_t>() > 0xFFFFFFFFull) {
      throw Error(ErrorCode::kBadSetFile, std::string("'") + key + "' entries must be non-negative integers");
    }
    out.push_back(item.get<std::uint32_t>());
  }
  return out;
}

json descriptor(const Field& field) {
  json d;
  d["p"] = field.p();
  d["k"] = field.k();
  d["modulus"] = field.spec().modulus;
  return d;
}

}  // namespace

FSet parse_set_document(std::string_view text, const SetFileOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kBadSetFile, std::string("set file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kBadSetFile, "set file must be a JSON object");
  const std::uint32_t p = get_u32(doc, "p");
  // k defaults to 1 and the modulus to the default irreducible.
  const std::uint32_t k = doc.contains("k") ? get_u32(doc, "k") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (doc.contains("modulus")) {
    modulus = get_u32_list(doc, "modulus");
  } else if (k > 1 && poly::is_prime(p)) {
    modulus = poly::smallest_irreducible(p, k);
  }
  const auto elements = get_u32_list(doc, "elements");

  FieldPtr field;
  if (options.reuse && options.reuse->p() == p && options.reuse->k() == k &&
      (k == 1 || !modulus || options.reuse->spec().modulus == *modulus)) {
    field = options.reuse;
  } else {
    BuildOptions build;
    build.universe_cap = options.universe_cap;
    field = Field::build(p, k, modulus, build);
  }
  FSet s(field);
  for (auto x : elements) {
    if (x >= field->order()) {
      throw Error(ErrorCode::kBadSetFile,
                  "element " + std::to_string(x) + " is outside F_q with q = " + std::to_string(field->order()));
    }
    s.insert(x);
  }
  return s;
}

FSet read_set_file(const std::filesystem::path& path, const SetFileOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadSetFile, "cannot open set file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_document(buf.str(), options);
}

std::string to_set_document(const FSet& set) {
  json doc = descriptor(set.field());
  doc["elements"] = set.elements();
  return doc.dump() + "\n";
}

void write_set_file(const std::filesystem::path& path, const FSet& set) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kBadSetFile, "cannot write set file " + path.string());
  out << to_set_document(set);
}

std::string field_descriptor_json(const Field& field) { return descriptor(field).dump(); }

}  // namespace ffgrowth
