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

#ifndef AAL_NAMESPACE_CATEGORY_H_
#define AAL_NAMESPACE_CATEGORY_H_

#include <array>
#include <string_view>

#include "aal/api_ref.h"

namespace aal {

enum class NamespaceCategory : uint8_t {
  kAndroidCore,
  kJdk,
  kApacheHttp,
  kKhronos,
  kTest,
  kInternal,
  kAndroidxSupport,
  kOther,
};

inline constexpr std::array<NamespaceCategory, 8> kAllNamespaceCategories = {
    NamespaceCategory::kAndroidCore, NamespaceCategory::kJdk,
    NamespaceCategory::kApacheHttp,  NamespaceCategory::kKhronos,
    NamespaceCategory::kTest,        NamespaceCategory::kInternal,
    NamespaceCategory::kAndroidxSupport, NamespaceCategory::kOther,
};

// Package-prefix classification, first match wins:
//   android.test.* junit.*        test
//   com.android.internal.*        internal
//   androidx.* android.support.*  androidx-support
//   android.*                     android-core
//   javax.microedition.khronos.*  khronos
//   java.* javax.*                jdk
//   org.apache.http.*             apache-http
//   anything else                 other
NamespaceCategory NamespaceCategoryOf(const ClassId& cls);

std::string_view NamespaceCategoryName(NamespaceCategory category);

// Classes under android.*, androidx.*, android.support.* or com.android.*.
bool IsAndroidEcosystem(const ClassId& cls);

}  // namespace aal

#endif  // AAL_NAMESPACE_CATEGORY_H_
