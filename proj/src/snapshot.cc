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

#include "aal/snapshot.h"

#include "aal/error.h"

namespace aal {

std::string_view SourceKindName(SourceKind kind) {
  switch (kind) {
    case SourceKind::kJar: return "JAR";
    case SourceKind::kXml: return "XML";
    case SourceKind::kTxt: return "TXT";
    case SourceKind::kCsv: return "CSV";
    case SourceKind::kDevice: return "DEVICE";
  }
  return "?";
}

std::optional<SourceKind> SourceKindFromName(std::string_view name) {
  for (SourceKind kind : {SourceKind::kJar, SourceKind::kXml, SourceKind::kTxt,
                          SourceKind::kCsv, SourceKind::kDevice}) {
    if (SourceKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view VisibilityName(Visibility vis) {
  switch (vis) {
    case Visibility::kPublic: return "public";
    case Visibility::kProtected: return "protected";
    case Visibility::kPackage: return "package";
    case Visibility::kPrivate: return "private";
  }
  return "?";
}

std::optional<Visibility> VisibilityFromName(std::string_view name) {
  for (Visibility vis : {Visibility::kPublic, Visibility::kProtected, Visibility::kPackage,
                         Visibility::kPrivate}) {
    if (VisibilityName(vis) == name) return vis;
  }
  return std::nullopt;
}

std::string_view PolicyCategoryName(PolicyCategory category) {
  switch (category) {
    case PolicyCategory::kPublic: return "public";
    case PolicyCategory::kConditionallyBlocked: return "conditionally-blocked";
    case PolicyCategory::kBlocked: return "blocked";
    case PolicyCategory::kUnsupported: return "unsupported";
    case PolicyCategory::kOther: return "other";
  }
  return "other";
}

PolicyCategory RestrictionPolicy::category() const {
  auto any = [this](auto&& pred) {
    for (const std::string& flag : flags) {
      if (pred(flag)) return true;
    }
    return false;
  };
  if (any([](const std::string& f) { return f == "public-api" || f == "sdk" || f == "whitelist"; })) {
    return PolicyCategory::kPublic;
  }
  if (any([](const std::string& f) {
        return f.starts_with("max-target-") || f.starts_with("greylist-max-");
      })) {
    return PolicyCategory::kConditionallyBlocked;
  }
  if (any([](const std::string& f) { return f == "blocked" || f == "blacklist"; })) {
    return PolicyCategory::kBlocked;
  }
  if (any([](const std::string& f) { return f == "unsupported" || f == "greylist"; })) {
    return PolicyCategory::kUnsupported;
  }
  return PolicyCategory::kOther;
}

std::string RestrictionPolicy::JoinedFlags() const {
  std::string out;
  for (const std::string& flag : flags) {
    if (!out.empty()) out += ',';
    out += flag;
  }
  return out;
}

AalSnapshot::Counts CountByKind(const std::set<ApiRef>& apis) {
  AalSnapshot::Counts counts;
  for (const ApiRef& api : apis) {
    switch (api.kind()) {
      case ApiKind::kClass: ++counts.classes; break;
      case ApiKind::kField: ++counts.fields; break;
      case ApiKind::kMethod: ++counts.methods; break;
    }
  }
  return counts;
}

AalSnapshot::Counts AalSnapshot::CountByKind() const { return aal::CountByKind(apis); }

void AalSnapshot::Validate(bool require_classes) const {
  auto check_keys = [this](const auto& sidecar, const char* what) {
    for (const auto& [api, unused] : sidecar) {
      if (!apis.contains(api)) {
        throw Error(std::string(what) + " entry without API: " + api.canonical());
      }
    }
  };
  check_keys(policy, "policy");
  check_keys(lifetime, "lifetime");
  check_keys(visibility, "visibility");
  if (!require_classes) return;
  for (const ApiRef& api : apis) {
    if (api.is_member() && !apis.contains(ApiRef::Class(api.declaring_class()))) {
      throw Error("member without declaring class: " + api.canonical());
    }
  }
}

bool ParseOptions::Keeps(const ApiRef& api) const {
  if (api.kind() == ApiKind::kMethod && api.name() == "<clinit>") return false;
  if (!filter_synthesized) return true;
  return !(filter ? filter->Matches(api) : IsSynthesized(api));
}

}  // namespace aal
