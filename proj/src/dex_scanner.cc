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

#include "aal/dex_scanner.h"

#include <algorithm>
#include <map>
#include <regex>

#include "aal/descriptor.h"
#include "aal/namespace_category.h"
#include "aal/zip_archive.h"

namespace aal {

namespace {

enum class LookupKind { kNone, kClass, kField, kMethod, kConstructor };

LookupKind ClassifyInvoke(const DexFile& dex, uint32_t method_idx) {
  const DexFile::MethodId& m = dex.method_ids()[method_idx];
  const std::string& owner = dex.TypeDescriptor(m.class_idx);
  const std::string& name = dex.String(m.name_idx);
  if (owner == "Ljava/lang/Class;") {
    if (name == "forName") return LookupKind::kClass;
    if (name == "getMethod" || name == "getDeclaredMethod") return LookupKind::kMethod;
    if (name == "getField" || name == "getDeclaredField") return LookupKind::kField;
    if (name == "getConstructor" || name == "getDeclaredConstructor") return LookupKind::kConstructor;
    return LookupKind::kNone;
  }
  if (name == "loadClass" && owner.ends_with("ClassLoader;")) return LookupKind::kClass;
  return LookupKind::kNone;
}

// Dotted names only: a bare identifier is far more likely a member name.
bool LooksLikeClassName(const std::string& s) {
  return s.find('.') != std::string::npos && ClassId::IsValid(s);
}

bool IsExcluded(const ClassId& cls, const ScanOptions& options) {
  const std::string& name = cls.binary_name();
  return std::any_of(options.exclude_prefixes.begin(), options.exclude_prefixes.end(),
                     [&](const std::string& p) { return name.starts_with(p); });
}

}  // namespace

DexReferences ParseDexReferences(const DexFile& dex, Diagnostics* diagnostics) {
  DexReferences out;
  std::set<uint32_t> defined_types;
  for (const DexFile::ClassDef& def : dex.class_defs()) {
    defined_types.insert(def.class_idx);
    try {
      out.defined_classes.insert(ClassIdFromDescriptor(dex.TypeDescriptor(def.class_idx)));
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add("class_def " + dex.TypeDescriptor(def.class_idx) + ": " + e.what());
    }
  }
  auto external = [&](uint32_t class_idx) {
    return !defined_types.contains(class_idx) && !dex.TypeDescriptor(class_idx).starts_with("[");
  };
  for (uint32_t i = 0; i < dex.field_ids().size(); ++i) {
    const DexFile::FieldId& f = dex.field_ids()[i];
    if (!external(f.class_idx)) continue;
    try {
      out.fields.insert(ApiRef::Field(ClassIdFromDescriptor(dex.TypeDescriptor(f.class_idx)),
                                      dex.String(f.name_idx)));
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add(dex.FieldSignature(i) + ": " + e.what());
    }
  }
  for (uint32_t i = 0; i < dex.method_ids().size(); ++i) {
    const DexFile::MethodId& m = dex.method_ids()[i];
    if (!external(m.class_idx)) continue;
    try {
      std::vector<TypeName> params;
      for (uint32_t t : dex.proto_ids()[m.proto_idx].param_type_idx) {
        params.push_back(JniTypeToTypeName(dex.TypeDescriptor(t)));
      }
      out.methods.insert(ApiRef::Method(ClassIdFromDescriptor(dex.TypeDescriptor(m.class_idx)),
                                        dex.String(m.name_idx), std::move(params)));
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add(dex.MethodSignature(i) + ": " + e.what());
    }
  }
  return out;
}

DexReferences ParseDexReferences(std::span<const uint8_t> bytes, Diagnostics* diagnostics) {
  return ParseDexReferences(DexFile(bytes), diagnostics);
}

ReflectionTargets DetectReflection(const DexFile& dex, Diagnostics* diagnostics) {
  ReflectionTargets out;
  for (const DexFile::CodeBody& body : dex.CodeBodies(diagnostics)) {
    std::set<std::string> strings;
    std::set<ClassId> class_constants;
    std::set<LookupKind> lookups;
    try {
      std::span<const uint16_t> insns(body.insns);
      for (size_t pc = 0; pc < insns.size(); pc += DexInstructionWidth(insns, pc)) {
        uint8_t op = insns[pc] & 0xff;
        if (op == kOpConstString) {
          strings.insert(dex.String(insns[pc + 1]));
        } else if (op == kOpConstStringJumbo) {
          strings.insert(dex.String(insns[pc + 1] | uint32_t{insns[pc + 2]} << 16));
        } else if (op == kOpConstClass) {
          const std::string& desc = dex.TypeDescriptor(insns[pc + 1]);
          if (desc.starts_with("L")) class_constants.insert(ClassIdFromDescriptor(desc));
        } else if ((op >= kOpInvokeVirtual && op <= kOpInvokeInterface) ||
                   (op >= kOpInvokeVirtualRange && op <= kOpInvokeInterfaceRange)) {
          uint32_t method_idx = insns[pc + 1];
          if (method_idx >= dex.method_ids().size()) {
            throw FormatError("dex: method index " + std::to_string(method_idx) + " out of range");
          }
          lookups.insert(ClassifyInvoke(dex, method_idx));
        }
      }
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add(dex.MethodSignature(body.method_idx) + ": " + e.what());
      continue;
    }

    std::set<ClassId> receivers = class_constants;
    if (lookups.contains(LookupKind::kClass)) {
      for (const std::string& s : strings) {
        if (!LooksLikeClassName(s)) continue;
        out.classes.insert(ClassId(s));
        receivers.insert(ClassId(s));
      }
    }
    for (const ClassId& cls : receivers) {
      if (lookups.contains(LookupKind::kConstructor)) out.methods.emplace(cls, "<init>");
      for (const std::string& s : strings) {
        if (lookups.contains(LookupKind::kField) && IsValidMemberName(s, ApiKind::kField)) {
          out.fields.insert(ApiRef::Field(cls, s));
        }
        if (lookups.contains(LookupKind::kMethod) && IsValidMemberName(s, ApiKind::kMethod) &&
            !s.starts_with("<")) {
          out.methods.emplace(cls, s);
        }
      }
    }
  }
  return out;
}

std::string UsageReport::Serialize() const {
  std::string out = "#aal-usage v1 apk=" + apk_id + "\n";
  auto section = [&out](const char* header, std::vector<std::string> lines) {
    std::sort(lines.begin(), lines.end());
    out += header;
    out += '\n';
    for (const std::string& line : lines) out += line + '\n';
  };
  auto lines_of = [](const std::set<ApiRef>& apis) {
    std::vector<std::string> lines;
    for (const ApiRef& api : apis) lines.push_back(api.canonical());
    return lines;
  };
  section("[direct]", lines_of(direct));
  section("[extra]", lines_of(extra));
  std::vector<std::string> reflect_lines;
  for (const ApiRef& api : reflect) {
    reflect_lines.push_back(reflect_by_name.contains(api) ? api.canonical() + "\tmatch=name"
                                                          : api.canonical());
  }
  for (const auto& [cls, name] : reflect_unresolved) {
    reflect_lines.push_back("M " + cls.binary_name() + " " + name + " (?)\tmatch=none");
  }
  section("[reflect]", std::move(reflect_lines));
  return out;
}

UsageReport ScanDexImages(std::span<const std::vector<uint8_t>> images,
                          const std::set<ApiRef>& aal_union, const ScanOptions& options,
                          Diagnostics* diagnostics) {
  UsageReport report;
  std::set<ApiRef> referenced;
  ReflectionTargets targets;
  for (size_t i = 0; i < images.size(); ++i) {
    try {
      DexFile dex(images[i]);
      DexReferences refs = ParseDexReferences(dex, diagnostics);
      referenced.insert(refs.fields.begin(), refs.fields.end());
      referenced.insert(refs.methods.begin(), refs.methods.end());
      report.defined_classes.insert(refs.defined_classes.begin(), refs.defined_classes.end());
      ReflectionTargets found = DetectReflection(dex, diagnostics);
      targets.classes.insert(found.classes.begin(), found.classes.end());
      targets.fields.insert(found.fields.begin(), found.fields.end());
      targets.methods.insert(found.methods.begin(), found.methods.end());
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add("dex image " + std::to_string(i) + ": " + e.what());
    }
  }

  auto in_scope = [&](const ClassId& cls) {
    return !report.defined_classes.contains(cls) && NamespaceCategoryOf(cls) != NamespaceCategory::kJdk &&
           !IsExcluded(cls, options);
  };
  for (const ApiRef& api : referenced) {
    if (!in_scope(api.declaring_class())) continue;
    if (aal_union.contains(api)) {
      report.direct.insert(api);
    } else if (IsAndroidEcosystem(api.declaring_class())) {
      report.extra.insert(api);
    }
  }

  for (const ClassId& cls : targets.classes) {
    if (in_scope(cls)) report.reflect.insert(ApiRef::Class(cls));
  }
  for (const ApiRef& field : targets.fields) {
    if (in_scope(field.declaring_class())) report.reflect.insert(field);
  }
  if (!targets.methods.empty()) {
    std::map<std::pair<ClassId, std::string>, std::vector<ApiRef>> by_name;
    for (const ApiRef& api : aal_union) {
      if (api.kind() == ApiKind::kMethod) by_name[{api.declaring_class(), api.name()}].push_back(api);
    }
    for (const auto& key : targets.methods) {
      if (!in_scope(key.first)) continue;
      auto it = by_name.find(key);
      if (it == by_name.end()) {
        report.reflect_unresolved.insert(key);
        continue;
      }
      for (const ApiRef& api : it->second) {
        report.reflect.insert(api);
        report.reflect_by_name.insert(api);
      }
    }
  }
  return report;
}

UsageReport ScanApk(std::span<const uint8_t> archive, const std::set<ApiRef>& aal_union,
                    const ScanOptions& options, Diagnostics* diagnostics) {
  static const std::regex kDexEntry(R"(classes\d*\.dex)");
  ZipReader zip(archive);
  std::vector<const ZipEntry*> entries;
  for (const ZipEntry& entry : zip.entries()) {
    if (std::regex_match(entry.name, kDexEntry)) entries.push_back(&entry);
  }
  if (entries.empty()) throw FormatError("apk: no classes*.dex entry found");
  std::sort(entries.begin(), entries.end(),
            [](const ZipEntry* a, const ZipEntry* b) { return a->name < b->name; });
  std::vector<std::vector<uint8_t>> images;
  for (const ZipEntry* entry : entries) {
    try {
      images.push_back(zip.Extract(*entry));
    } catch (const Error& e) {
      if (diagnostics) diagnostics->Add(entry->name + ": " + e.what());
    }
  }
  return ScanDexImages(images, aal_union, options, diagnostics);
}

}  // namespace aal
