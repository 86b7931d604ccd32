// Copyright 2026 The AAL Toolkit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aal/jar_parser.h"

#include <algorithm>
#include <string_view>
#include <vector>

#include "aal/zip_archive.h"

namespace aal {

namespace {

bool IsClassEntry(std::string_view name) {
  if (!name.ends_with(".class") || name.starts_with("META-INF/")) return false;
  size_t slash = name.rfind('/');
  std::string_view base = slash == std::string_view::npos ? name : name.substr(slash + 1);
  return base != "module-info.class" && base != "package-info.class";
}

}  // namespace

void AddParsedClass(const ParsedClass& cls, const ParseOptions& options, AalSnapshot* snapshot) {
  auto add = [&](ApiRef api, uint16_t flags) {
    if (!options.Keeps(api)) return;
    snapshot->visibility[api] = VisibilityFromAccess(flags);
    snapshot->apis.insert(std::move(api));
  };
  add(ApiRef::Class(cls.id), cls.access_flags);
  for (const ParsedField& field : cls.fields) add(ApiRef::Field(cls.id, field.name), field.access_flags);
  for (const ParsedMethod& method : cls.methods) {
    add(ApiRef::Method(cls.id, method.name, method.params), method.access_flags);
  }
}

AalSnapshot ParseArchive(std::span<const uint8_t> archive, int api_level,
                         const ParseOptions& options, Diagnostics* diagnostics) {
  ZipReader zip(archive);
  std::vector<const ZipEntry*> entries;
  for (const ZipEntry& entry : zip.entries()) {
    if (IsClassEntry(entry.name)) entries.push_back(&entry);
  }
  std::sort(entries.begin(), entries.end(),
            [](const ZipEntry* a, const ZipEntry* b) { return a->name < b->name; });

  AalSnapshot snapshot;
  snapshot.kind = SourceKind::kJar;
  snapshot.api_level = api_level;
  for (const ZipEntry* entry : entries) {
    try {
      std::vector<uint8_t> bytes = zip.Extract(*entry);
      AddParsedClass(ParseClassFile(bytes), options, &snapshot);
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add(entry->name + ": " + e.what());
    }
  }
  return snapshot;
}

}  // namespace aal
