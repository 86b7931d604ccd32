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
//
// APK usage scanning. External field and method references are harvested
// from the DEX id tables and classified against a union of API lists:
//   direct   referenced and present in some list
//   extra    referenced, under an Android namespace, present in no list
//   reflect  targets of reflective lookups with constant names
// References to JDK classes are discarded.

#ifndef AAL_DEX_SCANNER_H_
#define AAL_DEX_SCANNER_H_

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aal/api_ref.h"
#include "aal/dex_file.h"
#include "aal/error.h"

namespace aal {

struct DexReferences {
  std::set<ApiRef> fields;
  std::set<ApiRef> methods;
  std::set<ClassId> defined_classes;
};

// Field and method ids whose declaring class is not defined in this DEX.
// Ids on array types (e.g. clone() on int[]) are skipped; ids that do not
// convert to an identity are reported and skipped.
DexReferences ParseDexReferences(const DexFile& dex, Diagnostics* diagnostics = nullptr);
DexReferences ParseDexReferences(std::span<const uint8_t> bytes, Diagnostics* diagnostics = nullptr);

// A class member looked up by constant name. Method parameter lists are never
// known, so method targets are (class, name) pairs.
struct ReflectionTargets {
  std::set<ClassId> classes;
  std::set<ApiRef> fields;
  std::set<std::pair<ClassId, std::string>> methods;  // "<init>" for constructors
};

// Flow-insensitive, per method body: every constant string or class loaded
// in a body is paired with every reflective lookup invoked in it. Class
// lookups (Class.forName, ClassLoader.loadClass) take dotted string
// constants. Member lookups on java.lang.Class take receivers from const-class
// operands and from the body's class-lookup strings. Bodies that fail to
// decode are reported and skipped.
ReflectionTargets DetectReflection(const DexFile& dex, Diagnostics* diagnostics = nullptr);

struct ScanOptions {
  // Binary-name prefixes whose references are ignored, e.g. "com.example.".
  std::vector<std::string> exclude_prefixes;
};

struct UsageReport {
  std::string apk_id;
  std::set<ApiRef> direct;
  std::set<ApiRef> extra;
  // Exact class and field targets, plus methods matched to the lists by
  // class and name.
  std::set<ApiRef> reflect;
  std::set<ApiRef> reflect_by_name;  // subset of reflect
  std::set<std::pair<ClassId, std::string>> reflect_unresolved;
  std::set<ClassId> defined_classes;

  // "[direct]", "[extra]" and "[reflect]" sections of canonical lines, each
  // sorted bytewise. Name-matched methods carry "\tmatch=name"; unresolved
  // ones are written "M <class> <name> (?)\tmatch=none".
  std::string Serialize() const;
};

// Scans the DEX images of one APK. Classes defined in any image are not
// external. Per-image parse errors are reported and the image skipped.
UsageReport ScanDexImages(std::span<const std::vector<uint8_t>> images,
                          const std::set<ApiRef>& aal_union, const ScanOptions& options = {},
                          Diagnostics* diagnostics = nullptr);

// Reads every root-level classes*.dex entry of |archive|. Throws FormatError
// when there is none.
UsageReport ScanApk(std::span<const uint8_t> archive, const std::set<ApiRef>& aal_union,
                    const ScanOptions& options = {}, Diagnostics* diagnostics = nullptr);

}  // namespace aal

#endif  // AAL_DEX_SCANNER_H_
