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

#ifndef AAL_DESCRIPTOR_H_
#define AAL_DESCRIPTOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "aal/api_ref.h"

namespace aal {

// JVM/JNI descriptor conversions shared by the class-file, DEX, XML and CSV
// readers. All functions throw DescriptorError on malformed input.

// "I" -> int, "[Ljava/lang/String;" -> java.lang.String[]. "V" is accepted.
TypeName JniTypeToTypeName(std::string_view desc);

struct MethodDescriptor {
  std::vector<TypeName> params;
  TypeName return_type;
};

// "(I[Ljava/lang/Object;)Ljava/lang/String;"
MethodDescriptor ParseMethodDescriptor(std::string_view desc);

// Parameter list only, for inputs that carry "(...)" without a return type.
std::vector<TypeName> ParseParameterDescriptors(std::string_view params);

// "android/app/Service" -> android.app.Service
ClassId ClassIdFromInternalName(std::string_view internal_name);

// "Landroid/app/Service;" -> android.app.Service. Array and primitive
// descriptors are rejected.
ClassId ClassIdFromDescriptor(std::string_view desc);

// Inverse direction, used by fixture writers and report tools.
std::string TypeNameToJni(const TypeName& type);
std::string ClassIdToDescriptor(const ClassId& cls);

}  // namespace aal

#endif  // AAL_DESCRIPTOR_H_
