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

#ifndef AAL_CLASS_FILE_H_
#define AAL_CLASS_FILE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aal/api_ref.h"
#include "aal/snapshot.h"

namespace aal {

// See JVMS Tables 4.1-B, 4.5-A, 4.6-A.
enum AccessFlags : uint16_t {
  kAccPublic = 0x0001,
  kAccPrivate = 0x0002,
  kAccProtected = 0x0004,
  kAccStatic = 0x0008,
  kAccFinal = 0x0010,
  kAccBridge = 0x0040,
  kAccVarargs = 0x0080,
  kAccInterface = 0x0200,
  kAccAbstract = 0x0400,
  kAccSynthetic = 0x1000,
  kAccAnnotation = 0x2000,
  kAccEnum = 0x4000,
  kAccModule = 0x8000,
};

Visibility VisibilityFromAccess(uint16_t access_flags);

struct ParsedField {
  std::string name;
  TypeName type;
  uint16_t access_flags;
};

struct ParsedMethod {
  std::string name;
  std::vector<TypeName> params;
  TypeName return_type;
  uint16_t access_flags;
};

struct ParsedClass {
  ClassId id;
  uint16_t access_flags;
  std::vector<ParsedField> fields;
  // <clinit> is dropped. When a bridge method shares (name, params) with a
  // non-bridge method only the latter remains.
  std::vector<ParsedMethod> methods;
};

// Decodes the parts of a class file needed for API identity: this-class,
// access flags, and field/method names and descriptors. Attributes are
// skipped. Throws FormatError (bad magic, unsupported version, truncation,
// bad constant-pool index) or DescriptorError.
ParsedClass ParseClassFile(std::span<const uint8_t> bytes);

}  // namespace aal

#endif  // AAL_CLASS_FILE_H_
