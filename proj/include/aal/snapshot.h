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

#ifndef AAL_SNAPSHOT_H_
#define AAL_SNAPSHOT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "aal/api_ref.h"
#include "aal/synthesized.h"

namespace aal {

enum class SourceKind : uint8_t { kJar, kXml, kTxt, kCsv, kDevice };

std::string_view SourceKindName(SourceKind kind);  // "JAR", "XML", ...
std::optional<SourceKind> SourceKindFromName(std::string_view name);

enum class Visibility : uint8_t { kPublic, kProtected, kPackage, kPrivate };

std::string_view VisibilityName(Visibility vis);
std::optional<Visibility> VisibilityFromName(std::string_view name);

struct Lifetime {
  int since = 1;
  std::optional<int> deprecated;
  std::optional<int> removed;

  bool operator==(const Lifetime&) const = default;
};

enum class PolicyCategory : uint8_t {
  kPublic,
  kConditionallyBlocked,
  kBlocked,
  kUnsupported,
  kOther,
};

std::string_view PolicyCategoryName(PolicyCategory category);

// Flags attached to a member in hiddenapi-flags.csv. The category is derived
// from the flags, first rule wins: public-api/sdk/whitelist -> public;
// max-target-* or greylist-max-* -> conditionally-blocked;
// blocked/blacklist -> blocked; unsupported/greylist -> unsupported;
// anything else -> other.
struct RestrictionPolicy {
  std::set<std::string> flags;

  PolicyCategory category() const;
  std::string JoinedFlags() const;  // comma separated, sorted

  bool operator==(const RestrictionPolicy&) const = default;
};

// One API list at one API level.
struct AalSnapshot {
  SourceKind kind = SourceKind::kTxt;
  int api_level = 1;
  std::set<ApiRef> apis;
  std::map<ApiRef, RestrictionPolicy> policy;  // CSV
  std::map<ApiRef, Lifetime> lifetime;         // XML
  std::map<ApiRef, Visibility> visibility;     // JAR, DEVICE

  struct Counts {
    size_t classes = 0;
    size_t fields = 0;
    size_t methods = 0;
    size_t of(ApiKind kind) const {
      return kind == ApiKind::kClass ? classes : kind == ApiKind::kField ? fields : methods;
    }
  };
  Counts CountByKind() const;

  // Throws Error if a sidecar key is missing from apis or a member's
  // declaring class is absent (when |require_classes| is set).
  void Validate(bool require_classes) const;

  bool operator==(const AalSnapshot&) const = default;
};

AalSnapshot::Counts CountByKind(const std::set<ApiRef>& apis);

// Shared parser knobs. <clinit> is dropped regardless of filter_synthesized.
struct ParseOptions {
  bool filter_synthesized = true;
  const SynthesizedFilter* filter = nullptr;  // nullptr: default heuristics

  // Applies the <clinit> rule and, when enabled, the synthesized heuristics.
  bool Keeps(const ApiRef& api) const;
};

// Externally produced on-device inventory: a DEVICE snapshot plus the set of
// classes the device dump attempted to load.
struct DeviceInventory {
  AalSnapshot snapshot;
  std::set<ClassId> universe;
};

}  // namespace aal

#endif  // AAL_SNAPSHOT_H_
