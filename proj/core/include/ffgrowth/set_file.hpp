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

// Set files: one JSON document carrying the field descriptor and the element
// indices,
//
//   {"elements":[0,1],"k":1,"modulus":[0,1],"p":5}
//
// Readers accept any key order, element order and duplicates; "k" defaults
// to 1 and "modulus" to the default irreducible polynomial. The writer is
// canonical: sorted keys, ascending unique elements, one trailing newline.

#ifndef FFGROWTH_SET_FILE_HPP_
#define FFGROWTH_SET_FILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "ffgrowth/field.hpp"
#include "ffgrowth/fset.hpp"

namespace ffgrowth {

struct SetFileOptions {
  std::uint64_t universe_cap = kDefaultUniverseCap;
  // When the document describes this field, the set is attached to it instead
  // of building a fresh copy.
  FieldPtr reuse;
};

// Throws Error{kBadSetFile} on malformed input, plus any field-construction
// error for the embedded descriptor.
FSet parse_set_document(std::string_view text, const SetFileOptions& options = {});
FSet read_set_file(const std::filesystem::path& path, const SetFileOptions& options = {});

std::string to_set_document(const FSet& set);
void write_set_file(const std::filesystem::path& path, const FSet& set);

// Field descriptor as a JSON object string with keys k, modulus, p.
std::string field_descriptor_json(const Field& field);

}  // namespace ffgrowth

#endif  // FFGROWTH_SET_FILE_HPP_
