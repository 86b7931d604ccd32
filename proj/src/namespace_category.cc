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

#include "aal/namespace_category.h"

namespace aal {

namespace {

struct PrefixRule {
  std::string_view prefix;
  NamespaceCategory category;
};

constexpr PrefixRule kRules[] = {
    {"android.test.", NamespaceCategory::kTest},
    {"junit.", NamespaceCategory::kTest},
    {"com.android.internal.", NamespaceCategory::kInternal},
    {"androidx.", NamespaceCategory::kAndroidxSupport},
    {"android.support.", NamespaceCategory::kAndroidxSupport},
    {"android.", NamespaceCategory::kAndroidCore},
    {"javax.microedition.khronos.", NamespaceCategory::kKhronos},
    {"java.", NamespaceCategory::kJdk},
    {"javax.", NamespaceCategory::kJdk},
    {"org.apache.http.", NamespaceCategory::kApacheHttp},
};

}  // namespace

NamespaceCategory NamespaceCategoryOf(const ClassId& cls) {
  const std::string& name = cls.binary_name();
  for (const PrefixRule& rule : kRules) {
    if (name.starts_with(rule.prefix)) return rule.category;
  }
  return NamespaceCategory::kOther;
}

std::string_view NamespaceCategoryName(NamespaceCategory category) {
  switch (category) {
    case NamespaceCategory::kAndroidCore: return "android-core";
    case NamespaceCategory::kJdk: return "jdk";
    case NamespaceCategory::kApacheHttp: return "apache-http";
    case NamespaceCategory::kKhronos: return "khronos";
    case NamespaceCategory::kTest: return "test";
    case NamespaceCategory::kInternal: return "internal";
    case NamespaceCategory::kAndroidxSupport: return "androidx-support";
    case NamespaceCategory::kOther: return "other";
  }
  return "other";
}

bool IsAndroidEcosystem(const ClassId& cls) {
  const std::string& name = cls.binary_name();
  return name.starts_with("android.") || name.starts_with("androidx.") ||
         name.starts_with("com.android.");
}

}  // namespace aal
